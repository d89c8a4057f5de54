#pragma once

#include <ostream>
#include <vector>

#include <nlohmann/json.hpp>

#include "orthorep/arithmetic.hpp"
#include "orthorep/induced_rep.hpp"
#include "orthorep/irreps.hpp"
#include "orthorep/steinberg.hpp"

namespace orthorep {

using Json = nlohmann::ordered_json;

/// Fields in this order: family, rank, weight, dim, self_dual, fs, epsilon, min_char.
Json to_json(const IrrepCandidate& c);
Json to_json(const TensorCandidate& t);
Json to_json(const ClassificationReport& r);
Json to_json(const Theorem1Result& r);
Json to_json(const PrimePair& pair);
Json to_json(const ModMatrix& m);

/// One candidate per line.
void write_jsonl(std::ostream& out, const std::vector<IrrepCandidate>& candidates);

void write_table(std::ostream& out, const std::vector<IrrepCandidate>& candidates);
void write_table(std::ostream& out, const ClassificationReport& r);
void write_table(std::ostream& out, const Theorem1Result& r);

} // namespace orthorep
