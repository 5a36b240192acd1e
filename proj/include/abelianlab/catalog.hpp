#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "abelianlab/word.hpp"

namespace abelianlab::catalog {

const Morphism& thue_morse();      // 0->01, 1->10
const Morphism& period_doubling(); // 0->01, 1->00
const Morphism& phi();             // 0->12, 1->12, 2->00; fixed point block(pd, 2)
const Morphism& nu();              // 0->12, 1->13, 2->20, 3->21; fixed point block(tm, 2)
const Morphism& tau3();            // 0->0, 1->2, 2->1
const Morphism& tau4();            // 0->0, 1->2, 2->1, 3->3
const Morphism& tau_prime();       // 0->3, 1->1, 2->2, 3->0
const Morphism& g();               // 0->1, 1->0, 2->0, 3->1

// Word ids: tm, pd, tm2 = block(tm,2), pd2 = block(pd,2), pd3 = block(pd,3).
bool is_word_id(std::string_view id);
const std::vector<std::string>& word_ids();
WordPrefix word(std::string_view id, std::size_t len);

// Parses "0:01,1:10" (digit images) into a morphism over the smallest fitting alphabet.
Morphism parse_morphism(const std::string& text, std::string name = {});

}  // namespace abelianlab::catalog
