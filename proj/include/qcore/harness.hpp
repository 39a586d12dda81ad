#pragma once

/// @file harness.hpp
/// @brief Verification of registry records: series equalities, subsequence
///        relations, 5^k families, congruences and the sign census.

#include <algorithm>
#include <atomic>
#include <exception>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "expr.hpp"
#include "partitions.hpp"
#include "registry.hpp"
#include "relation.hpp"
#include "report.hpp"
#include "theta.hpp"

namespace qcore {

inline constexpr std::size_t kDefaultVerifyOrder = 1000;
inline constexpr unsigned kDefaultKmax = 3;

/// Adds `delta` to the last side of a claim at `index` (an exponent for series,
/// n for relations). Used to check that the harness catches corruption.
struct Perturbation {
  long long index = 0;
  long delta = 1;
};

struct VerifyOptions {
  std::size_t order = kDefaultVerifyOrder;
  unsigned kmax = kDefaultKmax;
  std::optional<Perturbation> perturb;
};

inline TruncatedSeries sequence_series(Sequence s, std::size_t order) {
  switch (s) {
    case Sequence::c5: return gen_c5(order);
    case Sequence::a5bar: return gen_a5bar(order);
    case Sequence::b5bar: return gen_b5bar(order);
  }
  throw std::logic_error("unhandled sequence");
}

inline std::optional<Sequence> parse_sequence(std::string_view name) { return sequence_from_name(name); }

// ---------------------------------------------------------------------------
// Series equalities

inline VerificationReport verify_series_claim(const std::string& id, std::string_view claim, const VerifyOptions& opt) {
  std::vector<ExprPtr> sides;
  std::size_t start = 0;
  for (;;) {
    const std::size_t eq = claim.find('=', start);
    sides.push_back(parse_expr(claim.substr(start, eq == std::string_view::npos ? std::string_view::npos : eq - start)));
    if (eq == std::string_view::npos) break;
    start = eq + 1;
  }
  if (sides.size() < 2) throw ParseError("series claim needs at least one '='", claim.size());

  std::vector<TruncatedSeries> values;
  values.reserve(sides.size());
  for (const auto& s : sides) values.push_back(evaluate(s, opt.order));
  if (opt.perturb && opt.perturb->index >= 0 && static_cast<std::size_t>(opt.perturb->index) <= opt.order) {
    auto& last = values.back();
    std::vector<Coefficient> c(last.coeffs());
    c[static_cast<std::size_t>(opt.perturb->index)] += opt.perturb->delta;
    last = TruncatedSeries(std::move(c));
  }

  VerificationReport best = compare_series(id, values[0], values[1]);
  for (std::size_t i = 2; i < values.size(); ++i) {
    VerificationReport r = compare_series(id, values[0], values[i]);
    if (r.mismatch && (!best.mismatch || r.mismatch->index < best.mismatch->index)) best = r;
  }
  best.checks = (opt.order + 1) * (values.size() - 1);
  return best;
}

// ---------------------------------------------------------------------------
// Relations between sequence terms

namespace detail {

struct SequenceTable {
  std::optional<TruncatedSeries> c5, a5, b5;

  const TruncatedSeries& get(Sequence s, std::size_t order) {
    auto& slot = s == Sequence::c5 ? c5 : (s == Sequence::a5bar ? a5 : b5);
    if (!slot || slot->order() < order) slot = sequence_series(s, order);
    return *slot;
  }
};

inline Rational evaluate_form(const LinearForm& f, long long n, SequenceTable& seqs, std::size_t order) {
  Rational v = f.constant;
  for (const auto& r : f.reads) v += r.coefficient * Rational(seqs.get(r.seq, order)[r.slope * n + r.offset]);
  return v;
}

// Largest n >= 0 for which every read index is <= order; -1 if none.
inline long long relation_range(const Relation& rel, std::size_t order) {
  long long n_max = -1;
  bool bounded = false;
  const long long N = static_cast<long long>(order);
  for (const auto& side : rel.sides) {
    for (const auto& r : side.reads) {
      if (r.slope == 0) {
        if (r.offset > N) return -1;
        continue;
      }
      if (r.offset > N) return -1;
      const long long lim = (N - r.offset) / r.slope;
      n_max = bounded ? std::min(n_max, lim) : lim;
      bounded = true;
    }
  }
  return bounded ? n_max : 0;
}

inline std::string rational_str(const Rational& q) { return q.get_str(); }

struct RelationOutcome {
  std::size_t checks = 0;
  std::optional<Mismatch> mismatch;
};

inline RelationOutcome check_relation(const Relation& rel, std::size_t order, const std::optional<Perturbation>& perturb,
                                      SequenceTable& seqs) {
  RelationOutcome out;
  const long long n_max = relation_range(rel, order);
  for (long long n = 0; n <= n_max; ++n) {
    std::vector<Rational> vals;
    vals.reserve(rel.sides.size());
    for (const auto& s : rel.sides) vals.push_back(evaluate_form(s, n, seqs, order));
    if (perturb && perturb->index == n) vals.back() += perturb->delta;
    ++out.checks;
    if (rel.modulus) {
      Rational q = (vals[0] - vals[1]) / *rel.modulus;
      if (q.get_den() != 1) {
        out.mismatch = Mismatch{n, rational_str(vals[0]), rational_str(vals[1]) + " (mod " + rational_str(*rel.modulus) + ")"};
        return out;
      }
    } else {
      for (std::size_t i = 1; i < vals.size(); ++i) {
        if (vals[i] != vals[0]) {
          out.mismatch = Mismatch{n, rational_str(vals[0]), rational_str(vals[i])};
          return out;
        }
      }
    }
  }
  return out;
}

inline bool mentions_family_parameter(std::string_view claim) {
  const auto toks = tokenize(claim);
  return std::any_of(toks.begin(), toks.end(), [](const Token& t) { return t.kind == Token::Kind::ident && t.text == "K"; });
}

}  // namespace detail

inline VerificationReport verify_relation_claim(const std::string& id, std::string_view claim, const VerifyOptions& opt) {
  detail::SequenceTable seqs;
  VerificationReport r;
  r.id = id;
  r.order = opt.order;
  if (!detail::mentions_family_parameter(claim)) {
    auto out = detail::check_relation(parse_relation(claim), opt.order, opt.perturb, seqs);
    r.checks = out.checks;
    if (out.mismatch) {
      r.status = Status::mismatch;
      r.mismatch = out.mismatch;
    }
    return r;
  }
  if (opt.kmax < 2) throw std::invalid_argument("kmax must be at least 2");
  std::ostringstream detail_text;
  long long K = 5;
  for (unsigned k = 2; k <= opt.kmax; ++k) {
    K *= 5;
    auto out = detail::check_relation(parse_relation(claim, K), opt.order, opt.perturb, seqs);
    r.checks += out.checks;
    detail_text << (k > 2 ? ", " : "") << "k=" << k << ": " << out.checks;
    if (out.mismatch) {
      r.status = Status::mismatch;
      r.mismatch = out.mismatch;
      r.mismatch->lhs = "k=" + std::to_string(k) + ": " + r.mismatch->lhs;
      break;
    }
  }
  r.detail = detail_text.str() + " instances";
  return r;
}

// ---------------------------------------------------------------------------
// Sign census

struct CensusResult {
  std::size_t total = 0;  // indices 1..N
  std::size_t zero = 0;
  std::size_t positive = 0;
  std::size_t negative = 0;
};

/// Sign frequencies of seq(n) for 1 <= n <= N.
inline CensusResult sign_census(Sequence seq, std::size_t order) {
  if (order < 1) throw std::invalid_argument("sign_census: N must be at least 1");
  const TruncatedSeries s = sequence_series(seq, order);
  CensusResult c;
  c.total = order;
  for (std::size_t n = 1; n <= order; ++n) {
    const int sg = sgn(s.at(n));
    if (sg == 0) {
      ++c.zero;
    } else if (sg > 0) {
      ++c.positive;
    } else {
      ++c.negative;
    }
  }
  return c;
}

/// count/total as an exact percentage with two decimals, e.g. "30.05%".
inline std::string exact_percent(std::size_t count, std::size_t total) {
  if (total == 0) return "n/a";
  const unsigned long long scaled = (static_cast<unsigned long long>(count) * 10000ULL) / total;  // floor
  std::ostringstream os;
  os << scaled / 100 << '.' << (scaled % 100 < 10 ? "0" : "") << scaled % 100 << '%';
  return os.str();
}

struct CensusBounds {
  Sequence seq = Sequence::b5bar;
  Rational zero, positive, negative;
};

inline CensusBounds parse_census_claim(std::string_view claim) {
  const auto colon = claim.find(':');
  if (colon == std::string_view::npos) throw ParseError("census claim needs 'seq:'", 0);
  auto seq = sequence_from_name(detail::trim(claim.substr(0, colon)));
  if (!seq) throw ParseError("unknown sequence in census claim", 0);
  CensusBounds b;
  b.seq = *seq;
  std::string rest(claim.substr(colon + 1));
  std::stringstream ss(rest);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::stringstream is(item);
    std::string what, ge, frac;
    is >> what >> ge >> frac;
    if (ge != ">=" || frac.empty()) throw ParseError("census bound must read '<class> >= p/q'", colon);
    Rational v(frac);
    v.canonicalize();
    if (what == "zero") {
      b.zero = v;
    } else if (what == "positive") {
      b.positive = v;
    } else if (what == "negative") {
      b.negative = v;
    } else {
      throw ParseError("unknown census class '" + what + "'", colon);
    }
  }
  return b;
}

inline VerificationReport verify_census_claim(const std::string& id, std::string_view claim, const VerifyOptions& opt) {
  const CensusBounds b = parse_census_claim(claim);
  VerificationReport r;
  r.id = id;
  r.order = opt.order;
  if (opt.order < 1) {
    r.detail = "no positive indices at N=0";
    return r;
  }
  const CensusResult c = sign_census(b.seq, opt.order);
  r.checks = 3;
  auto frac = [&](std::size_t k) { return std::to_string(k) + "/" + std::to_string(c.total); };
  std::ostringstream os;
  os << "N=" << c.total << " zero=" << frac(c.zero) << " (" << exact_percent(c.zero, c.total) << ")"
     << " positive=" << frac(c.positive) << " (" << exact_percent(c.positive, c.total) << ")"
     << " negative=" << frac(c.negative) << " (" << exact_percent(c.negative, c.total) << ")";
  r.detail = os.str();
  struct Check {
    const char* name;
    std::size_t count;
    const Rational& bound;
  };
  const Check checks[] = {{"zero", c.zero, b.zero}, {"positive", c.positive, b.positive}, {"negative", c.negative, b.negative}};
  for (const auto& ch : checks) {
    // count/total >= bound  <=>  count * den >= num * total
    if (Rational(static_cast<unsigned long>(ch.count), static_cast<unsigned long>(c.total)) < ch.bound) {
      r.status = Status::mismatch;
      r.mismatch = Mismatch{static_cast<long long>(c.total), std::string(ch.name) + "=" + frac(ch.count),
                            ">= " + ch.bound.get_str()};
      break;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Dispatch

inline VerificationReport verify_record(const IdentityRecord& rec, const VerifyOptions& opt) {
  return timed([&] {
    switch (rec.kind) {
      case RecordKind::series_equality: return verify_series_claim(rec.id, rec.claim, opt);
      case RecordKind::subsequence_relation:
      case RecordKind::recurrence_family:
      case RecordKind::congruence_family: return verify_relation_claim(rec.id, rec.claim, opt);
      case RecordKind::census: return verify_census_claim(rec.id, rec.claim, opt);
    }
    throw std::logic_error("unhandled record kind");
  });
}

inline VerificationReport verify(const Registry& reg, std::string_view id, const VerifyOptions& opt) {
  try {
    return verify_record(reg.at(id), opt);
  } catch (const OracleScaleExceeded& e) {
    return VerificationReport::skipped(std::string(id), opt.order, e.what());
  }
}

inline VerificationReport verify(std::string_view id, std::size_t order) {
  VerifyOptions opt;
  opt.order = order;
  return verify(Registry::builtin(), id, opt);
}

/// Verifies a list of records with up to `jobs` worker threads; the result
/// order always matches the input order.
inline std::vector<VerificationReport> verify_records(const std::vector<const IdentityRecord*>& recs,
                                                      const VerifyOptions& opt, unsigned jobs = 1) {
  std::vector<VerificationReport> out(recs.size());
  auto run_one = [&](std::size_t i) {
    try {
      out[i] = verify_record(*recs[i], opt);
    } catch (const OracleScaleExceeded& e) {
      out[i] = VerificationReport::skipped(recs[i]->id, opt.order, e.what());
    }
  };
  if (jobs <= 1 || recs.size() <= 1) {
    for (std::size_t i = 0; i < recs.size(); ++i) run_one(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(recs.size());
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(jobs, recs.size()); ++t) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < recs.size();) {
        try {
          run_one(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

inline std::vector<VerificationReport> verify_all(const Registry& reg, Tier tier, const VerifyOptions& opt,
                                                  unsigned jobs = 1) {
  return verify_records(reg.tier(tier), opt, jobs);
}

inline std::vector<VerificationReport> verify_all(Tier tier, std::size_t order) {
  VerifyOptions opt;
  opt.order = order;
  return verify_all(Registry::builtin(), tier, opt);
}

// ---------------------------------------------------------------------------
// Direct checks

/// seq(m*n + r) == 0 (mod modulus) for every m*n + r <= N.
inline VerificationReport check_congruence(Sequence seq, unsigned long modulus, std::size_t m, std::size_t r,
                                           std::size_t order) {
  std::ostringstream claim;
  claim << to_string(seq) << "(" << m << "n+" << r << ") == 0 mod " << modulus;
  VerifyOptions opt;
  opt.order = order;
  return timed([&] { return verify_relation_claim("congruence:" + claim.str(), claim.str(), opt); });
}

inline VerificationReport check_recurrence_a5(unsigned kmax, std::size_t order) {
  VerifyOptions opt;
  opt.order = order;
  opt.kmax = kmax;
  return verify(Registry::builtin(), "thm1.recurrence", opt);
}

inline VerificationReport check_recurrence_b5(unsigned kmax, std::size_t order) {
  VerifyOptions opt;
  opt.order = order;
  opt.kmax = kmax;
  return verify(Registry::builtin(), "thm2.recurrence", opt);
}

struct Summary {
  std::size_t exact = 0, mismatched = 0, skipped = 0;
  bool all_ok() const { return mismatched == 0; }
};

inline Summary summarize(const std::vector<VerificationReport>& reports) {
  Summary s;
  for (const auto& r : reports) {
    switch (r.status) {
      case Status::exact_match: ++s.exact; break;
      case Status::mismatch: ++s.mismatched; break;
      case Status::skipped: ++s.skipped; break;
    }
  }
  return s;
}

}  // namespace qcore
