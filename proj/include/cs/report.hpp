#pragma once

#include <string>

namespace cs {

enum class Flag { Pass, Fail, NotApplicable };

inline const char* to_string(Flag f) {
    switch (f) {
        case Flag::Pass: return "pass";
        case Flag::Fail: return "fail";
        default: return "not-applicable";
    }
}

}  // namespace cs
