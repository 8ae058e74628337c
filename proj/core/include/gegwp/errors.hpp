#ifndef GEGWP_ERRORS_HPP
#define GEGWP_ERRORS_HPP

#include <stdexcept>

namespace gegwp {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnsupportedFamilyOrder : public Error { public: using Error::Error; };
class LengthMismatch         : public Error { public: using Error::Error; };
class DimensionMismatch      : public Error { public: using Error::Error; };
class InvalidTree            : public Error { public: using Error::Error; };
class SingularFrequency      : public Error { public: using Error::Error; };
class QuadratureFailure      : public Error { public: using Error::Error; };
class InvalidFrequency       : public Error { public: using Error::Error; };
class DuplicateFrequency     : public Error { public: using Error::Error; };
class BasisNotFound          : public Error { public: using Error::Error; };
class NonPositiveDefinite    : public Error { public: using Error::Error; };
class ZeroVariance           : public Error { public: using Error::Error; };
class InsufficientPairs      : public Error { public: using Error::Error; };

} // namespace gegwp

#endif
