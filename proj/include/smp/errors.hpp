#pragma once

#include <stdexcept>
#include <string>

namespace smp {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidPeriod : public Error { public: using Error::Error; };
class PeriodMismatch : public Error { public: using Error::Error; };
class StructureViolation : public Error { public: using Error::Error; };
class DivisionByZero : public Error { public: using Error::Error; };
class NotSmp : public Error { public: using Error::Error; };
class DegeneratePivot : public Error { public: using Error::Error; };
class WindowTooSmall : public Error { public: using Error::Error; };
class KTooSmall : public Error { public: using Error::Error; };
class SingularMatrix : public Error { public: using Error::Error; };
class NotCirculant : public Error { public: using Error::Error; };

} // namespace smp
