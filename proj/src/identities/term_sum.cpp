#include "bek/identities.hpp"

namespace bek::identities {

void TermSum::add(const Poly& term) {
    if (term.is_zero()) return;
    if (flip_ && *flip_ == count_)
        value_ -= term;
    else
        value_ += term;
    ++count_;
}

}  // namespace bek::identities
