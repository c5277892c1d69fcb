#pragma once

#include <string>
#include <string_view>

namespace chroma {

/// Outcome of a structural-lemma check. Only `Violation` contradicts the
/// statement being checked; `Structural` means the input was not the object
/// it claimed to be, `Inapplicable` that the hypotheses do not hold.
enum class Verdict { Ok, Violation, Inapplicable, Structural };

std::string_view to_string(Verdict v);

struct CheckResult {
    Verdict verdict = Verdict::Ok;
    std::string detail;

    static CheckResult ok() { return {}; }
    static CheckResult violation(std::string why) { return {Verdict::Violation, std::move(why)}; }
    static CheckResult inapplicable(std::string why) { return {Verdict::Inapplicable, std::move(why)}; }
    static CheckResult structural(std::string why) { return {Verdict::Structural, std::move(why)}; }

    bool is_ok() const { return verdict == Verdict::Ok; }
};

}  // namespace chroma
