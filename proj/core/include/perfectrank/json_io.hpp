#pragma once

#include <nlohmann/json.hpp>

#include "perfectrank/certify.hpp"
#include "perfectrank/format.hpp"
#include "perfectrank/probe.hpp"
#include "perfectrank/tensor.hpp"
#include "perfectrank/witness.hpp"

namespace perfectrank {

/// All documents use insertion-ordered keys so identical inputs produce
/// byte-identical serializations.
using Json = nlohmann::ordered_json;

Json bounds_json(const Format& f, const BoundsReport& rep);
Json perfect_json(const Format& f, const PerfectReport& rep);

/// Keys: format, r, q, support, jacobian{rows, cols, rank}, verdict,
/// digest, primes, version.
Json certificate_json(const Certificate& cert);

/// Same leading keys as the certificate (format, r, q, support) followed
/// by the factor vectors under "groups".
Json witness_json(const WitnessPoint& w);

Json probe_json(const ProbeReport& rep);
Json als_json(const AlsReport& rep);

/// {"dims": [...], "values": [...]} with float entries as numbers.
Json tensor_json(const DenseTensor<double>& t);

/// {"dims": [...], "values": [...]} with exact entries as "num/den"
/// strings (denominator always explicit).
Json tensor_json(const DenseTensor<Rational>& t);

}  // namespace perfectrank
