#ifndef MONIDEAL_ERRORS_HPP
#define MONIDEAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace monideal {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two objects from incompatible rings were combined.
class ring_mismatch : public error {
public:
    using error::error;
};

// Checked 64-bit exponent arithmetic overflowed.
class overflow_error : public error {
public:
    using error::error;
};

// An operation was applied outside its domain (zero/unit ideal where a
// proper nonzero ideal is required, colon by the zero ideal, ...).
class domain_error : public error {
public:
    using error::error;
};

// Surface-syntax or JSON errors; always carries a 1-based position.
class parse_error : public error {
public:
    parse_error(const std::string& msg, int line, int col)
        : error(msg + " (line " + std::to_string(line) + ", column " +
                std::to_string(col) + ")"),
          line_(line),
          col_(col) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return col_; }

private:
    int line_;
    int col_;
};

} // namespace monideal

#endif
