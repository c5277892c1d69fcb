#include "chroma/check.hpp"

namespace chroma {

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Ok: return "ok";
        case Verdict::Violation: return "violation";
        case Verdict::Inapplicable: return "inapplicable";
        case Verdict::Structural: return "structural";
    }
    return "unknown";
}

}  // namespace chroma
