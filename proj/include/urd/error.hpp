#ifndef URD_ERROR_HPP
#define URD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace urd {

// Base of every exception raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define URD_DEFINE_ERROR(Name)                    \
    class Name : public Error {                   \
    public:                                       \
        explicit Name(const std::string& what)    \
            : Error(#Name ": " + what) {}         \
    }

URD_DEFINE_ERROR(StructureError);
URD_DEFINE_ERROR(DecodeError);
URD_DEFINE_ERROR(DivisibilityError);
URD_DEFINE_ERROR(SpecError);
URD_DEFINE_ERROR(PreconditionError);
URD_DEFINE_ERROR(NotFound);
URD_DEFINE_ERROR(DevelopmentError);
URD_DEFINE_ERROR(ConstructionError);
URD_DEFINE_ERROR(OracleError);

#undef URD_DEFINE_ERROR

} // namespace urd

#endif // URD_ERROR_HPP
