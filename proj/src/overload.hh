#ifndef RAMSEY_SRC_OVERLOAD_HH
#define RAMSEY_SRC_OVERLOAD_HH

namespace ramsey::detail
{
    template <typename... Fs>
    struct Overload : Fs... { using Fs::operator()...; };

    template <typename... Fs>
    Overload(Fs...) -> Overload<Fs...>;
}

#endif
