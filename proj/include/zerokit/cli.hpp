#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "zerokit/types.hpp"

namespace zk::cli {

enum ExitCode { kOk = 0, kRuntime = 1, kParse = 2, kDomain = 3, kMismatch = 4 };

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Request {
    std::string command;  // airy-zeros, bessel-zeros, asl-trace, verify
    Family family = Family::Airy;
    std::optional<cplx> alpha;
    std::optional<cplx> zero;
    Limit limit = Limit::None;
    double nu = 0.0;
    Rectangle region{{-10.0, -10.0}, {10.0, 10.0}};
    bool deriv = false;
    std::string format = "json";
    double tol = 1e-13;
    int max_iter = 30;
    std::optional<double> L;
    double level = 1.0;
    double max_arc = 20.0;
    int threads = 1;
};

// Parses argv (argv[0] is the program name). Throws ParseError with a
// message; `help` receives usage text when --help was given.
Request parse(int argc, const char* const* argv, std::string* help = nullptr);

// "re,im" and "re_lo,im_lo,re_hi,im_hi".
cplx parse_complex(const std::string& s);
Rectangle parse_region(const std::string& s);

// Runs a request, writing data to out and diagnostics to err.
int run(const Request& req, std::ostream& out, std::ostream& err);

// parse + run with the exit codes above. ZEROKIT_THREADS caps parallelism.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zk::cli
