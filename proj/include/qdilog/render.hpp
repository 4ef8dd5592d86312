#pragma once

#include "qdilog/qalgebra.hpp"
#include "qdilog/qseries.hpp"
#include "qdilog/roots.hpp"
#include "qdilog/strata.hpp"
#include "qdilog/verify.hpp"

#include <json.hpp>

#include <string>

namespace qdilog {

using Json = nlohmann::ordered_json;

// "1 - 2*q^(1/2) + q^2 + O(q^3)"
std::string format_series(const QSeries& s);
std::string format_dims(const DimVector& g, char sep = ',');
std::string format_root(const GridRoot& r);
// "q^2 P1^2 P2"
std::string format_factorization(const StratumData& d);

Json int_json(const Int& v);
// {lo, hi, coeffs}; hi is null for an exact series.
Json series_json(const QSeries& s);
Json quiver_json(const GridQuiver& gq);
Json root_json(const GridRoot& r);
Json element_json(const AlgebraElement& a);
Json verdict_json(const Verdict& v);
Json betti_json(const BettiTable& t);
Json strata_json(const GridQuiver& gq, const DimVector& gamma, Axis axis);

std::string verdict_pretty(const Verdict& v);
std::string betti_csv(const BettiTable& t);
std::string betti_pretty(const BettiTable& t);
std::string strata_pretty(const GridQuiver& gq, const DimVector& gamma, Axis axis);
std::string strata_csv(const GridQuiver& gq, const DimVector& gamma, Axis axis);
std::string roots_pretty(const GridQuiver& gq, Axis axis);
std::string normal_form_pretty(const NormalForm& nf);

}  // namespace qdilog
