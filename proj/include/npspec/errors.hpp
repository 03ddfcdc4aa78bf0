#ifndef NPSPEC_ERRORS_HPP
#define NPSPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace npspec {

// Failure categories surfaced through the C API as status codes.
enum class errc {
  domain = 1,      // argument outside the mathematical domain
  range,           // requested value unattainable (e.g. tuner target)
  singular,        // evaluation exactly on a kernel singularity
  resolution,      // grid/budget insufficient for the requested accuracy
  overflow,        // value not representable (overflow or total underflow)
  pole,            // map has a pole at this argument
  aliasing,        // sampled function leaks outside the grid
  budget,          // configured work limit exceeded
  invariant,       // a result-level invariant failed validation
  nonconverged,    // iterative solve did not converge
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw error(code, what); }

} // namespace npspec

#endif
