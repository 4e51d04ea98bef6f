#ifndef HSW_ERRORS_HPP
#define HSW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hsw {

// A Fourier multiplier or coefficient set broke the Hermitian symmetry a
// real-valued field requires.
class symmetry_error : public std::runtime_error {
public:
    explicit symmetry_error(const std::string& what) : std::runtime_error(what) {}
};

// A non-finite coefficient appeared during time stepping.
class blow_up_error : public std::runtime_error {
public:
    blow_up_error(long step, double time, const std::string& what)
        : std::runtime_error(what), step_(step), time_(time) {}
    long step() const { return step_; }
    double time() const { return time_; }

private:
    long step_;
    double time_;
};

} // namespace hsw

#endif
