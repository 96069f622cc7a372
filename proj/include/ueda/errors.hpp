#pragma once

#include <stdexcept>
#include <string>

namespace ueda {

// Base class for everything the library throws on purpose.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Input-shaped errors (bad files, bad windows, bad flags). The CLI maps these
// to exit code 2.
struct input_error : error {
    using error::error;
};

struct window_mismatch_error : input_error {
    using input_error::input_error;
};

struct parse_error : input_error {
    using input_error::input_error;
};

struct config_error : input_error {
    using input_error::input_error;
};

// Domain-shaped errors (mathematically meaningful failures). Exit code 1.
struct domain_error : error {
    using error::error;
};

struct out_of_window_error : domain_error {
    using domain_error::domain_error;
};

struct composition_domain_error : domain_error {
    using domain_error::domain_error;
};

struct normalization_error : domain_error {
    using domain_error::domain_error;
};

struct cusp_constraint_error : domain_error {
    using domain_error::domain_error;
};

struct atlas_inconsistency_error : domain_error {
    using domain_error::domain_error;
};

struct degenerate_normal_bundle_error : domain_error {
    using domain_error::domain_error;
};

struct precondition_error : domain_error {
    using domain_error::domain_error;
};

struct constants_estimation_error : domain_error {
    using domain_error::domain_error;
};

struct contraction_stuck_error : domain_error {
    using domain_error::domain_error;
};

}  // namespace ueda
