#pragma once

#include <stdexcept>
#include <string>

namespace lsf {

// All library failures derive from lsf::error and carry a short
// machine-greppable code (E_DOMAIN, E_SINGULAR, ...) that front ends print
// before the human-readable message.
class error : public std::runtime_error {
public:
    error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Invalid argument values or evaluation outside a function's domain.
class domain_error : public error {
public:
    explicit domain_error(const std::string& msg) : error("E_DOMAIN", msg) {}
};

// Iterative process failed to reach its tolerance within its cap.
class convergence_error : public error {
public:
    convergence_error(const std::string& msg, double residual)
        : error("E_CONVERGENCE", msg), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

// Linear system singular to working precision.
class singular_error : public error {
public:
    singular_error(const std::string& msg, int pivot_index)
        : error("E_SINGULAR", msg), pivot_index_(pivot_index) {}
    int pivot_index() const noexcept { return pivot_index_; }

private:
    int pivot_index_;
};

// A capability the input does not provide (e.g. missing derivative oracle).
class capability_error : public error {
public:
    explicit capability_error(const std::string& msg) : error("E_CAPABILITY", msg) {}
};

// Output file cannot be written.
class io_error : public error {
public:
    explicit io_error(const std::string& msg) : error("E_IO", msg) {}
};

} // namespace lsf
