#pragma once

#include <string>

#include "blockent/error.hpp"

namespace testutil {

/// Run f and return the blockent error code it throws ("" if none).
template <class F>
std::string error_code_of(F&& f) {
    try {
        f();
    } catch (const blockent::Error& e) {
        return e.code();
    } catch (...) {
        return "<non-blockent exception>";
    }
    return "";
}

}  // namespace testutil
