#pragma once

#include <stdexcept>
#include <string>

namespace bp {

// Bad inputs: violated preconditions, malformed files, out-of-range parameters.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A structural claim that the construction guarantees failed to hold.
// Carries the claim id and the step at which it fired so a run can be
// reproduced and the witness inspected.
struct claim_violation : std::runtime_error {
    std::string claim_id;
    long long step;
    std::string witness;

    claim_violation(std::string id, long long step_, std::string witness_)
        : std::runtime_error("claim " + id + " violated at step " + std::to_string(step_) +
                             (witness_.empty() ? "" : ": " + witness_)),
          claim_id(std::move(id)),
          step(step_),
          witness(std::move(witness_)) {}
};

// A search or construction ran out of its configured budget.
struct budget_exhausted : std::runtime_error {
    explicit budget_exhausted(const std::string& what) : std::runtime_error(what) {}
};

#define BP_REQUIRE(cond, msg)                      \
    do {                                           \
        if (!(cond)) throw ::bp::input_error(msg); \
    } while (0)

#define BP_CLAIM(cond, id, step, witness)                             \
    do {                                                              \
        if (!(cond)) throw ::bp::claim_violation(id, step, witness);  \
    } while (0)

}  // namespace bp
