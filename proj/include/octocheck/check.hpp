#pragma once

// Check outcomes. A check is a named mathematical claim evaluated exactly.
//
//   pass     the claim held everywhere it was evaluated
//   fail     an internal invariant of the library was violated
//   finding  a comparison between two stated formulations came out unequal;
//            recorded with a witness, adjudicated by nothing beyond exact
//            evaluation
//
// Every fail or finding carries a witness: the input that broke the claim
// and the two values that disagreed.

#include <functional>
#include <optional>
#include <string>
#include <utility>

namespace octo {

enum class CheckStatus { pass, fail, finding };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        default: return "finding";
    }
}

struct Witness {
    std::string input;
    std::string got;
    std::string expected;
};

struct CheckResult {
    std::string name;
    std::string claim;
    CheckStatus status = CheckStatus::pass;
    std::optional<Witness> witness;

    static CheckResult passed(std::string name, std::string claim) {
        return {std::move(name), std::move(claim), CheckStatus::pass, std::nullopt};
    }
    static CheckResult failed(std::string name, std::string claim, Witness w) {
        return {std::move(name), std::move(claim), CheckStatus::fail, std::move(w)};
    }
    static CheckResult found(std::string name, std::string claim, Witness w) {
        return {std::move(name), std::move(claim), CheckStatus::finding, std::move(w)};
    }
};

// Accumulates the first counterexample of an exhaustive sweep. Witness
// construction is deferred so passing sweeps never build strings.
class FirstWitness {
public:
    template <class MakeWitness>
    void require(bool ok, MakeWitness&& make) {
        if (!ok && !w_)
            w_ = make();
    }

    bool ok() const { return !w_.has_value(); }
    const std::optional<Witness>& witness() const { return w_; }

    CheckResult as_check(std::string name, std::string claim,
                         CheckStatus on_mismatch = CheckStatus::fail) const {
        if (ok())
            return CheckResult::passed(std::move(name), std::move(claim));
        if (on_mismatch == CheckStatus::finding)
            return CheckResult::found(std::move(name), std::move(claim), *w_);
        return CheckResult::failed(std::move(name), std::move(claim), *w_);
    }

private:
    std::optional<Witness> w_;
};

}  // namespace octo
