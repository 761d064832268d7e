#include "credo/dynamics.hpp"

namespace credo {

bool and_stable_within(const Agenda& agenda, const std::vector<size_t>& members) {
    for (size_t a = 0; a < members.size(); ++a) {
        for (size_t b = a + 1; b < members.size(); ++b) {
            TruthSet conj = agenda[members[a]].truthset() & agenda[members[b]].truthset();
            if (conj.empty() || conj.full()) continue;
            bool present = false;
            for (size_t k : members) {
                if (agenda[k].truthset() == conj) {
                    present = true;
                    break;
                }
            }
            if (!present) return false;
        }
    }
    return true;
}

}  // namespace credo
