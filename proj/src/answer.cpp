#include "sortnet/answer.hpp"

namespace sortnet {

std::string format_answer(const Answer& answer) {
    switch (answer.kind) {
        case Answer::Kind::yes:
            return "ANSWER yes n=" + std::to_string(answer.n) +
                   " k=" + std::to_string(answer.k);
        case Answer::Kind::no:
            return "ANSWER no n=" + std::to_string(answer.n) +
                   " k=" + std::to_string(answer.k);
        case Answer::Kind::maybe:
            return "ANSWER maybe";
    }
    return "ANSWER maybe";
}

}  // namespace sortnet
