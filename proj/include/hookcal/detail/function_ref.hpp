#pragma once

#include <memory>
#include <type_traits>
#include <utility>

namespace hookcal::detail {

// Non-owning callable reference (two pointers, no allocation). The referenced
// callable must outlive the FunctionRef; we only use it for visitor callbacks
// that live on the caller's stack.
template <typename Signature>
class FunctionRef;

template <typename R, typename... Args>
class FunctionRef<R(Args...)> {
public:
    template <typename F,
              typename = std::enable_if_t<
                  !std::is_same_v<std::remove_cvref_t<F>, FunctionRef>>>
    FunctionRef(F&& fn) noexcept  // NOLINT(google-explicit-constructor)
        : obj_(const_cast<void*>(static_cast<const void*>(std::addressof(fn)))),
          call_([](void* obj, Args... args) -> R {
              return (*static_cast<std::add_pointer_t<F>>(obj))(
                  std::forward<Args>(args)...);
          }) {}

    R operator()(Args... args) const {
        return call_(obj_, std::forward<Args>(args)...);
    }

private:
    void* obj_;
    R (*call_)(void*, Args...);
};

}  // namespace hookcal::detail
