#pragma once

#include <string>
#include <vector>

#include "abelianlab/complexity.hpp"
#include "abelianlab/regular.hpp"
#include "abelianlab/theorems.hpp"

namespace abelianlab::io {

// CSV has columns n,value; word id and kind travel out of band.
std::string series_to_csv(const ComplexitySeries& s);
ComplexitySeries series_from_csv(const std::string& text, const std::string& word_id, const StatisticKind& kind);

std::string series_to_json(const ComplexitySeries& s);
ComplexitySeries series_from_json(const std::string& text);

std::string series_to_text(const ComplexitySeries& s);

// Rationals as [num, den] pairs of integers (strings when beyond 64 bits).
std::string relations_to_json(const RelationSet& r);
RelationSet relations_from_json(const std::string& text);
std::string linear_representation_to_json(const LinearRepresentation& rep);
std::string automatic_to_json(const AutomaticKernel& a, const std::string& label);

std::string reports_to_json(const std::vector<VerificationReport>& reports);
std::string reports_to_text(const std::vector<VerificationReport>& reports);

}  // namespace abelianlab::io
