#include "filtval/verdict.hpp"

namespace filtval {

std::string to_string(Outcome outcome) {
    switch (outcome) {
        case Outcome::Holds:
            return "holds";
        case Outcome::Fails:
            return "fails";
        case Outcome::Inconclusive:
            return "inconclusive";
    }
    return {};
}

}  // namespace filtval
