#pragma once

/// @file registry.hpp
/// @brief The identity registry: every checked claim as a line of text.
///
/// Record format, one per line, fields separated by '|':
///
///     id | kind | tier | anchor | claim
///
/// kind is one of series, relation, recurrence, congruence, census.
///   series      "E1 = E2 [= E3 ...]" over series expressions (expr.hpp)
///   relation    "A = B [= ...]" over sequence reads (relation.hpp)
///   recurrence  a relation in K = 5^k, checked for k = 2..kmax
///   congruence  "A == B mod M"; a family when it mentions K
///   census      "seq: zero >= r, positive >= r, negative >= r"
/// Blank lines and lines starting with '#' are ignored.

#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qcore {

enum class RecordKind { series_equality, subsequence_relation, recurrence_family, congruence_family, census };
enum class Tier { core, extended };

inline const char* to_string(RecordKind k) {
  switch (k) {
    case RecordKind::series_equality: return "series";
    case RecordKind::subsequence_relation: return "relation";
    case RecordKind::recurrence_family: return "recurrence";
    case RecordKind::congruence_family: return "congruence";
    case RecordKind::census: return "census";
  }
  return "?";
}

inline const char* to_string(Tier t) { return t == Tier::core ? "core" : "extended"; }

struct IdentityRecord {
  std::string id;
  RecordKind kind = RecordKind::series_equality;
  Tier tier = Tier::core;
  std::string anchor;
  std::string claim;
};

class RegistryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnknownIdentity : public std::out_of_range {
 public:
  explicit UnknownIdentity(const std::string& id) : std::out_of_range("unknown identity '" + id + "'"), id_(id) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

namespace detail {

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

inline RecordKind parse_kind(const std::string& s, std::size_t line) {
  if (s == "series") return RecordKind::series_equality;
  if (s == "relation") return RecordKind::subsequence_relation;
  if (s == "recurrence") return RecordKind::recurrence_family;
  if (s == "congruence") return RecordKind::congruence_family;
  if (s == "census") return RecordKind::census;
  throw RegistryError("line " + std::to_string(line) + ": unknown kind '" + s + "'");
}

// The built-in records.
inline constexpr std::string_view kBuiltinRegistry = R"(
# --- theta function identities -------------------------------------------------
lemma.phimodeq | series | core | phi quintic modular equation | phi(q^5)^5/phi(q) + 4*q*f(q^5)^5/f(q) = phi(q)*phi(q^5)^3
lemma.phimodeqfora5 | series | core | phi^2(q) - phi^2(q^5) as a chi product | phi(q)^2 - phi(q^5)^2 = 4*q*chi(q)*f5*f20
lemma.psimodeq | series | core | psi quintic relation with q -> -q | psi(-q^5)^5/psi(-q) - psi(q^5)^5/psi(q) = 4*q^3*psi(q^10)^5/psi(q^2) + 2*q*f20^5/f4
lemma.psimodeqforb5 | series | core | psi^2(q) - q psi^2(q^5), two product forms | psi(q)^2 - q*psi(q^5)^2 = f(-q^5)*phi(-q^5)/chi(-q) = f(q,q^4)*f(q^2,q^3)
lemma.f5modeg | series | core | 5-core generating function vs f(q^5)^5/f(q) | f5^5/f1 - 4*q^3*f20^5/f4 = f(q^5)^5/f(q) + 2*q*f10^5/f2
lemma.A4B | series | core | f2^2/f1^4 split at level 10 | f2^2/f1^4 = f10^2/f5^4 + 4*q*f2*f10^5/(f1^3*f5^5)
lemma.c4n1 | relation | core | c5 at 4n+1 | c5(4n+1) = c5(2n)
lemma.c5n4 | relation | core | c5 at 5n+4 | c5(5n+4) = 5*c5(n)

# --- 5-dissections -------------------------------------------------------------
dissection.f1 | series | core | 5-dissection of f1 | f1 = f25*(1/R(q^5) - q - q^2*R(q^5))
dissection.inv_f1 | series | core | 5-dissection of 1/f1 | 1/f1 = f25^5/f5^6*(R(q^5)^-4 + q*R(q^5)^-3 + 2*q^2*R(q^5)^-2 + 3*q^3*R(q^5)^-1 + 5*q^4 - 3*q^5*R(q^5) + 2*q^6*R(q^5)^2 - q^7*R(q^5)^3 + q^8*R(q^5)^4)
dissection.phi | series | core | 5-dissection of phi | phi(q) = phi(q^25) + 2*q*f(q^15,q^35) + 2*q^4*f(q^5,q^45)
dissection.psi | series | core | 5-dissection of psi | psi(q) = f(q^10,q^15) + q*f(q^5,q^20) + q^3*psi(q^25)

# --- a5bar in terms of c5 ------------------------------------------------------
thm1.a5n2 | relation | core | a5bar(5n+2) | a5(5n+2) = 4*c5(5n+1)
thm1.a5n3 | relation | core | a5bar(5n+3) | a5(5n+3) = 4*c5(5n+2)
thm1.a10n1 | relation | core | a5bar(10n+1) | a5(10n+1) = 2*c5(10n)
thm1.a10n9 | relation | core | a5bar(10n+9) | a5(10n+9) = 2*c5(10n+8)
thm1.a20n6 | relation | core | a5bar(20n+6) | a5(20n+6) = 10*c5(10n+2)
thm1.a20n14 | relation | core | a5bar(20n+14) | a5(20n+14) = 10*c5(10n+6)
thm1.recurrence | recurrence | core | a5bar(5^k n) three-term recurrence | a5(K*n) = (K-1)/4*a5(5n) - (K-5)/4*a5(n)
cor1.mod10a | congruence | core | a5bar(20n+6) mod 10 | a5(20n+6) == 0 mod 10
cor1.mod10b | congruence | core | a5bar(20n+14) mod 10 | a5(20n+14) == 0 mod 10
cor1.mod5 | congruence | core | a5bar(20n+6) mod 5 (earlier, weaker form) | a5(20n+6) == 0 mod 5
cor1.mod5k | congruence | core | a5bar(5^k n) mod 5^k | 4*a5(K*n) == 5*a5(n) - a5(5n) mod K

# --- b5bar recurrences ---------------------------------------------------------
thm2.b4n3 | relation | core | b5bar(4n+3) | b5(4n+3) = 2*b5(2n)
thm2.recurrence | recurrence | core | b5bar(5^k(n+3)-3) three-term recurrence | b5(K*(n+3)-3) = (K-1)/4*b5(5n+12) - (K-5)/4*b5(n)

# --- b5bar in terms of a5bar and c5 --------------------------------------------
thm3.b4n1 | relation | core | b5bar(4n+1), reads b5bar(-1) at n = 0 | b5(4n+1) = c5(n) - 2*b5(2n-1)
thm3.b5_10n | relation | core | b5bar(10n) | b5(10n) = 1/2*c5(10n+2)
thm3.b5_10n_1 | relation | core | b5bar(10n+1) | b5(10n+1) = c5(5n+1)
thm3.b5_10n_2 | relation | core | b5bar(10n+2) | b5(10n+2) = 1/4*a5(2n+1) + 1/2*c5(2n)
thm3.b5_10n_3 | relation | core | b5bar(10n+3) | b5(10n+3) = c5(5n+2)
thm3.b5_10n_4 | relation | core | b5bar(10n+4) | b5(10n+4) = 1/2*c5(10n+6)
thm3.b5_10n_6 | relation | core | b5bar(10n+6) vanishes | b5(10n+6) = 0
thm3.b5_10n_8 | relation | core | b5bar(10n+8) vanishes | b5(10n+8) = 0
thm3.b5_20n_5 | relation | core | b5bar(20n+5) | b5(20n+5) = -c5(5n+1)
thm3.b5_20n_7 | relation | core | b5bar(20n+7) | b5(20n+7) = 1/2*a5(2n+1) + c5(2n)
thm3.b5_20n_9 | relation | core | b5bar(20n+9) | b5(20n+9) = -c5(5n+2)
thm3.b5_20n_15 | relation | core | b5bar(20n+15) vanishes | b5(20n+15) = 0
thm3.b5_20n_19 | relation | core | b5bar(20n+19) vanishes | b5(20n+19) = 0

# --- corollaries ---------------------------------------------------------------
cor.census | census | core | sign frequencies of b5bar(n), n >= 1 | b5: zero >= 3/10, positive >= 13/25, negative >= 1/10
cor.gireesh.a | relation | core | a5bar(20n+6) via b5bar | a5(20n+6) = 20*b5(10n)
cor.gireesh.b | relation | core | a5bar(20n+14) via b5bar | a5(20n+14) = 20*b5(10n+4)
cor.triangle | relation | core | a5bar(20n+6) = 10 c5(10n+2) = 20 b5bar(10n) | a5(20n+6) = 10*c5(10n+2) = 20*b5(10n) = 2*(10*b5(10n))
cor.b5.mod5k | congruence | core | b5bar(5^k(n+3)-3) mod 5^k | 4*b5(K*(n+3)-3) == 5*b5(n) - b5(5n+12) mod K
cor.b5.mod_20n18 | congruence | core | b5bar(5^k(20n+18)-3) mod (5^k-1)/4 | b5(K*(20n+18)-3) == 0 mod (K-1)/4
cor.b5.mod_20n22 | congruence | core | b5bar(5^k(20n+22)-3) mod (5^k-1)/4 | b5(K*(20n+22)-3) == 0 mod (K-1)/4
cor.b5.exact_20n18 | recurrence | core | b5bar(5^k(20n+18)-3) exact form | b5(K*(20n+18)-3) = (K-1)/4*b5(100n+87)
cor.b5.exact_20n22 | recurrence | core | b5bar(5^k(20n+22)-3) exact form | b5(K*(20n+22)-3) = (K-1)/4*b5(100n+107)

# --- proof-internal identities -------------------------------------------------
ext.a5_start | series | extended | phi quintic equation under q -> -q | phi(-q^5)^5/phi(-q) = 4*q*f5^5/f1 + phi(-q)*phi(-q^5)^3
ext.a5_start_alt | series | extended | phi quintic equation, both sides under q -> -q | alt(phi(q^5)^5/phi(q) + 4*q*f(q^5)^5/f(q)) = alt(phi(q)*phi(q^5)^3)
ext.a5_start_2 | series | extended | a5bar with phi(-q) 5-dissected | a5 = 4*q*c5 + phi(-q^5)^3*(phi(-q^25) - 2*q*f(-q^15,-q^35) + 2*q^4*f(-q^5,-q^45))
ext.abc_eta | series | extended | a5bar, b5bar and c5 quotients | phi(-q^5)^5/phi(-q) - 4*q^3*psi(-q^5)^5/psi(-q) = phi(-q^10)^5/phi(-q^2) + 2*q*f5^5/f1
ext.abc_i | series | extended | a5bar - 4q^3 b5bar | a5 - 4*q^3*b5 = a5(q^2) + 2*q*c5
ext.a2n1 | relation | extended | a5bar(2n+1) | a5(2n+1) - 4*b5(2n-2) = 2*c5(2n)
ext.a2n | relation | extended | a5bar(2n) | a5(2n) - 4*b5(2n-3) = a5(n) + 2*c5(2n-1)
ext.a4n2 | relation | extended | a5bar(4n+2) | a5(4n+2) - 4*b5(4n-1) = a5(2n+1) + 2*c5(4n+1)
ext.a4n | relation | extended | a5bar(4n) | a5(4n) - 4*b5(4n-3) = a5(2n) + 2*c5(4n-1)
ext.a4n1 | relation | extended | a5bar(4n+1) | a5(4n+1) - 4*b5(4n-2) = 2*c5(4n)
ext.a4n3 | relation | extended | a5bar(4n+3) | a5(4n+3) - 4*b5(4n) = 2*c5(4n+2)
ext.b4n_i | series | extended | odd part of b5bar | b5 - b5(-q) = 4*q^3*b5(-q^2) + 2*q*c5(q^4)
ext.b4n3 | relation | extended | b5bar(4n+3) from the odd part | b5(4n+3) = 2*b5(2n)
ext.a2n1_b | relation | extended | a5bar(2n+1) via b5bar(4n-1) | a5(2n+1) = 2*c5(2n) + 2*b5(4n-1)
ext.a4n2_v2 | relation | extended | a5bar(4n+2) | a5(4n+2) = 3*a5(2n+1) - 2*c5(2n)
ext.a4n2_v2i | relation | extended | a5bar(20n+6), intermediate | a5(20n+6) = 3*a5(10n+3) - 2*c5(10n+2)
ext.name4 | relation | extended | a5bar(10n+3) | a5(10n+3) = 4*c5(10n+2)
ext.name3 | relation | extended | a5bar(10n+7) | a5(10n+7) = 4*c5(10n+6)
ext.a5_20n14 | relation | extended | a5bar(20n+14), intermediate | a5(20n+14) = 3*a5(10n+7) - 2*c5(10n+6)
ext.a5_rec_main_1 | series | extended | a5bar generating function | a5 = 4*q*f5^5/f1 + phi(-q)*phi(-q^5)^3
ext.a5_rec_main_2 | series | extended | a5bar(5n) generating function | ap(a5,5,0) = 20*q*f5^5/f1 + phi(-q)^3*phi(-q^5)
ext.a5_eliminate_1 | series | extended | a5bar(5n) - a5bar(n) | ap(a5,5,0) - a5 = 16*q*f5^5/f1 + phi(-q)*phi(-q^5)*(phi(-q)^2 - phi(-q^5)^2)
ext.a5_25n_pre | series | extended | a5bar(25n) - a5bar(5n), before simplification | ap(a5,25,0) - ap(a5,5,0) = 80*q*f5^5/f1 + phi(-q)*(phi(-q^5)^3 - 24*q*phi(-q^5)*f(-q^3,-q^7)*f(-q,-q^9)) - phi(-q)^3*phi(-q^5)
ext.a5_25n_series | series | extended | a5bar(25n) - a5bar(5n) | ap(a5,25,0) - ap(a5,5,0) = 80*q*f5^5/f1 + 5*phi(-q)*phi(-q^5)*(phi(-q)^2 - phi(-q^5)^2)
ext.a5_25n | relation | extended | a5bar(25n) | a5(25n) = 6*a5(5n) - 5*a5(n)
ext.b5_rec_start | series | extended | q psi^5(-q^5)/psi(-q) | q*psi(-q^5)^5/psi(-q) = f10^5/f2 - psi(-q)*psi(-q^5)^3
ext.b5_rec_start_neg | series | extended | psi^2 relation under q -> -q | q*psi(-q^5)^2 = f(q^5)*phi(q^5)/chi(q) - psi(-q)^2
ext.b5_rec_new1 | series | extended | q times the b5bar generating function | q*b5 = f10^5/f2 - psi(-q)*psi(-q^5)^3
ext.b5_rec_main_2 | series | extended | b5bar(5n+2) generating function | ap(b5,5,2) = 5*q*f10^5/f2 + psi(-q)^3*psi(-q^5)
ext.b5_eliminate_1 | series | extended | b5bar(5n+2) - b5bar(n-2) | ap(b5,5,2) - q^2*b5 = 4*q*f10^5/f2 + psi(-q)*psi(-q^5)*(psi(-q)^2 + q*psi(-q^5)^2)
ext.b5_rec_before_last | series | extended | b5bar(25n+22) - b5bar(5n+2), before simplification | ap(b5,25,22) - ap(b5,5,2) = 20*q*f10^5/f2 + psi(-q)*(6*psi(-q^5)*f(q^2,-q^3)*f(-q,q^4) - q*psi(-q^5)^3) - psi(-q)^3*psi(-q^5)
ext.b5_eliminate_2 | series | extended | b5bar(25n+22) - b5bar(5n+2) | ap(b5,25,22) - ap(b5,5,2) = 20*q*f10^5/f2 + 5*psi(-q)*psi(-q^5)*(psi(-q)^2 + q*psi(-q^5)^2)
ext.b5_25n72 | relation | extended | b5bar(25n+72) | b5(25n+72) = 6*b5(5n+12) - 5*b5(n)
ext.b5_rec_main_1 | series | extended | q b5bar with psi(-q) 5-dissected | q*b5 = c5(q^2) - psi(-q^5)^3*(f(q^10,-q^15) - q*f(-q^5,q^20) - q^3*psi(-q^25))
ext.b5_10n_start | relation | extended | 4 b5bar(2n) | 4*b5(2n) = a5(2n+3) - 2*c5(2n+2)
ext.phi3phi | series | extended | phi^3(-q) phi(-q^5) in eta quotients | phi(-q)^3*phi(-q^5) = f1^6*f5^2/(f2^3*f10) = f1^2*f5^6/(f2*f10^3) - 4*q*f1^3*f5*f10^2/f2^2 = phi(-q)*phi(-q^5)^3 - 4*q*f5^5/f1 + 16*q^2*f10^5/f2
ext.a5_5n_series | series | extended | a5bar(5n) - a5bar(n) in eta quotients | ap(a5,5,0) = a5 + 12*q*f5^5/f1 + 16*q^2*f10^5/f2
ext.a5_10n_5 | relation | extended | a5bar(10n+5) | a5(10n+5) = a5(2n+1) + 12*c5(2n)
ext.b5_20n7_2 | relation | extended | 2 b5bar(20n+7) | 2*b5(20n+7) = a5(2n+1) + 2*c5(2n)
)";

}  // namespace detail

class Registry {
 public:
  Registry() = default;
  explicit Registry(std::vector<IdentityRecord> records) : records_(std::move(records)) {}

  /// Parses the record format described at the top of this header.
  static Registry parse(std::string_view text) {
    Registry reg;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      ++line_no;
      const std::string line = detail::trim(text.substr(start, end - start));
      start = end + 1;
      if (line.empty() || line[0] == '#') continue;
      std::vector<std::string> fields;
      std::size_t p = 0;
      for (int i = 0; i < 4; ++i) {
        const std::size_t bar = line.find('|', p);
        if (bar == std::string::npos) throw RegistryError("line " + std::to_string(line_no) + ": expected 5 fields");
        fields.push_back(detail::trim(std::string_view(line).substr(p, bar - p)));
        p = bar + 1;
      }
      fields.push_back(detail::trim(std::string_view(line).substr(p)));
      IdentityRecord rec;
      rec.id = fields[0];
      rec.kind = detail::parse_kind(fields[1], line_no);
      if (fields[2] == "core") {
        rec.tier = Tier::core;
      } else if (fields[2] == "extended") {
        rec.tier = Tier::extended;
      } else {
        throw RegistryError("line " + std::to_string(line_no) + ": unknown tier '" + fields[2] + "'");
      }
      rec.anchor = fields[3];
      rec.claim = fields[4];
      if (rec.id.empty() || rec.claim.empty()) throw RegistryError("line " + std::to_string(line_no) + ": empty id or claim");
      if (reg.find(rec.id)) throw RegistryError("line " + std::to_string(line_no) + ": duplicate id '" + rec.id + "'");
      reg.records_.push_back(std::move(rec));
    }
    return reg;
  }

  static Registry load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open registry file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
  }

  static const Registry& builtin() {
    static const Registry reg = parse(detail::kBuiltinRegistry);
    return reg;
  }

  const std::vector<IdentityRecord>& records() const { return records_; }

  const IdentityRecord* find(std::string_view id) const {
    for (const auto& r : records_)
      if (r.id == id) return &r;
    return nullptr;
  }

  const IdentityRecord& at(std::string_view id) const {
    if (auto* r = find(id)) return *r;
    throw UnknownIdentity(std::string(id));
  }

  /// Adds or replaces a record by id.
  void upsert(IdentityRecord rec) {
    for (auto& r : records_) {
      if (r.id == rec.id) {
        r = std::move(rec);
        return;
      }
    }
    records_.push_back(std::move(rec));
  }

  std::vector<const IdentityRecord*> tier(Tier t) const {
    std::vector<const IdentityRecord*> out;
    for (const auto& r : records_)
      if (r.tier == t) out.push_back(&r);
    return out;
  }

 private:
  std::vector<IdentityRecord> records_;
};

}  // namespace qcore
