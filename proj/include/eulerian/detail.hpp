#pragma once

#include <functional>
#include <type_traits>
#include <utility>

namespace eulerian::detail {

// Visitor callbacks may return void (always continue) or bool (false stops
// the enumeration early). Normalizes both shapes to "keep going?".
template <typename F, typename... Args>
bool keep_going(F& f, Args&&... args) {
    if constexpr (std::is_void_v<std::invoke_result_t<F&, Args...>>) {
        std::invoke(f, std::forward<Args>(args)...);
        return true;
    } else {
        return static_cast<bool>(std::invoke(f, std::forward<Args>(args)...));
    }
}

}  // namespace eulerian::detail
