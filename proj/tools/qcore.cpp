// qcore: expand q-series, verify the identity registry, query the t-core
// oracle, run the b5bar sign census and exchange OEIS b-files.

#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <qcore/qcore.hpp>

namespace {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2, kIo = 3 };

std::size_t default_order(std::size_t fallback) {
  if (const char* env = std::getenv("QCORE_DEFAULT_ORDER")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring malformed QCORE_DEFAULT_ORDER='" << env << "'\n";
    }
  }
  return fallback;
}

bool is_json(const std::string& format) { return format == "json"; }

int cmd_expand(const std::string& name, std::optional<std::size_t> order, const std::string& format) {
  const std::size_t n = order.value_or(default_order(100));
  const qcore::TruncatedSeries s = qcore::evaluate(name, n);
  if (is_json(format)) {
    nlohmann::ordered_json j;
    j["series"] = name;
    j["N"] = n;
    auto& arr = j["coefficients"] = nlohmann::json::array();
    for (const auto& c : s.coeffs()) arr.push_back(c.get_str());
    std::cout << j.dump() << '\n';
  } else {
    std::cout << s << '\n';
  }
  return kOk;
}

struct VerifyArgs {
  std::vector<std::string> selectors;
  std::optional<std::size_t> order;
  unsigned kmax = qcore::kDefaultKmax;
  std::string tier;
  unsigned jobs = 1;
  std::string format = "text";
  bool timing = false;
  std::string records_file;
  std::optional<long long> perturb_index;
  long perturb_delta = 1;
};

int cmd_verify(const VerifyArgs& a) {
  qcore::Registry reg = qcore::Registry::builtin();
  if (!a.records_file.empty()) {
    const qcore::Registry extra = qcore::Registry::load_file(a.records_file);
    for (const auto& rec : extra.records()) reg.upsert(rec);
  }

  std::vector<const qcore::IdentityRecord*> selected;
  auto add_tier = [&](const std::string& t) {
    if (t == "core" || t == "all")
      for (auto* r : reg.tier(qcore::Tier::core)) selected.push_back(r);
    if (t == "extended" || t == "all")
      for (auto* r : reg.tier(qcore::Tier::extended)) selected.push_back(r);
  };
  if (!a.tier.empty()) add_tier(a.tier);
  for (const auto& sel : a.selectors) {
    if (sel == "core" || sel == "extended" || sel == "all") {
      add_tier(sel);
    } else if (auto* r = reg.find(sel)) {
      selected.push_back(r);
    } else {
      std::cerr << "error: unknown identity '" << sel << "'\n";
      return kUsage;
    }
  }
  if (selected.empty()) add_tier("core");

  qcore::VerifyOptions opt;
  opt.order = a.order.value_or(default_order(qcore::kDefaultVerifyOrder));
  opt.kmax = a.kmax;
  if (a.perturb_index) opt.perturb = qcore::Perturbation{*a.perturb_index, a.perturb_delta};
  const qcore::FormatOptions fo{a.timing};

  const auto reports = qcore::verify_records(selected, opt, a.jobs);
  for (const auto& r : reports) std::cout << (is_json(a.format) ? qcore::format_json(r, fo) : qcore::format_text(r, fo)) << '\n';
  const auto summary = qcore::summarize(reports);
  if (!is_json(a.format)) std::cout << qcore::format_summary_text(summary) << '\n';
  return summary.all_ok() ? kOk : kMismatch;
}

int cmd_oracle(std::size_t n, std::size_t t, std::size_t ceiling, bool list, const std::string& format) {
  const auto cores = qcore::t_cores_of(n, t, ceiling);
  std::optional<qcore::Coefficient> series_value;
  if (t == 5) series_value = qcore::gen_c5(n).at(n);
  if (is_json(format)) {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["t"] = t;
    j["count"] = cores.size();
    if (series_value) {
      j["series"] = series_value->get_str();
      j["agree"] = *series_value == static_cast<unsigned long>(cores.size());
    }
    if (list) {
      auto& arr = j["cores"] = nlohmann::json::array();
      for (const auto& p : cores) arr.push_back(p.parts());
    }
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "c_" << t << "(" << n << ") = " << cores.size() << '\n';
    if (series_value) {
      const bool agree = *series_value == static_cast<unsigned long>(cores.size());
      std::cout << "series c5(" << n << ") = " << *series_value << (agree ? " (agrees)" : " (DISAGREES)") << '\n';
    }
    if (list)
      for (const auto& p : cores) std::cout << p << '\n';
  }
  if (series_value && *series_value != static_cast<unsigned long>(cores.size())) return kMismatch;
  return kOk;
}

int cmd_census(const std::string& name, std::optional<std::size_t> order, const std::string& format) {
  auto seq = qcore::parse_sequence(name);
  if (!seq) {
    std::cerr << "error: unknown sequence '" << name << "'\n";
    return kUsage;
  }
  const std::size_t n = order.value_or(default_order(10000));
  if (*seq == qcore::Sequence::b5bar) {
    qcore::VerifyOptions opt;
    opt.order = n;
    const auto r = qcore::verify_census_claim("census.b5", qcore::Registry::builtin().at("cor.census").claim, opt);
    if (is_json(format)) {
      std::cout << qcore::format_json(r) << '\n';
    } else {
      std::cout << qcore::format_text(r) << '\n';
    }
    return r.ok() ? kOk : kMismatch;
  }
  if (n < 1) {
    std::cerr << "error: census needs N >= 1\n";
    return kUsage;
  }
  const auto c = qcore::sign_census(*seq, n);
  if (is_json(format)) {
    nlohmann::ordered_json j{{"sequence", name}, {"N", n}, {"zero", c.zero}, {"positive", c.positive}, {"negative", c.negative}};
    std::cout << j.dump() << '\n';
  } else {
    std::cout << name << " N=" << n << " zero=" << c.zero << "/" << n << " (" << qcore::exact_percent(c.zero, n)
              << ") positive=" << c.positive << "/" << n << " (" << qcore::exact_percent(c.positive, n)
              << ") negative=" << c.negative << "/" << n << " (" << qcore::exact_percent(c.negative, n) << ")\n";
  }
  return kOk;
}

int cmd_bfile_export(const std::string& name, std::size_t n, const std::string& path) {
  const qcore::TruncatedSeries s = qcore::evaluate(name, n);
  if (path.empty() || path == "-") {
    qcore::write_bfile(std::cout, s);
    return kOk;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    return kIo;
  }
  qcore::write_bfile(out, s);
  out.flush();
  if (!out) {
    std::cerr << "error: write to '" << path << "' failed\n";
    return kIo;
  }
  return kOk;
}

int cmd_bfile_check(const std::string& name, const std::string& path) {
  const qcore::BFile bf = qcore::read_bfile(path);
  const qcore::TruncatedSeries s = qcore::evaluate(name, bf.last_index());
  const auto diff = qcore::check_bfile(bf, s);
  if (diff.first_bad_index) {
    std::cout << "discrepancy at " << *diff.first_bad_index << ": file has " << diff.found << ", expected " << diff.expected
              << '\n';
    return kMismatch;
  }
  std::cout << "ok: " << diff.compared << " values agree (indices " << bf.first_index << ".." << bf.last_index() << ")\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-series engine and identity verifier for 5-core analogs"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string expand_name;
  std::optional<std::size_t> expand_order;
  auto* expand = app.add_subcommand("expand", "Print coefficients 0..N of a series expression");
  expand->add_option("series", expand_name, "c5, a5bar, b5bar, phi(-q^5), f(q,q^4), poch(q,q^5), ...")->required();
  expand->add_option("degree", expand_order, "Truncation order N (default 100)");
  expand->add_option("-N,--order", expand_order, "Truncation order");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Verify registry identities");
  verify->add_option("selector", va.selectors, "Identity ids, or core | extended | all");
  verify->add_option("-N,--order", va.order, "Truncation order (default 1000)");
  verify->add_option("--kmax", va.kmax, "Largest k for 5^k families")->check(CLI::Range(2u, 12u));
  verify->add_option("--tier", va.tier, "core | extended | all")->check(CLI::IsMember({"core", "extended", "all"}));
  verify->add_option("--jobs", va.jobs, "Records verified in parallel")->check(CLI::Range(1u, 256u));
  verify->add_flag("--timing", va.timing, "Include elapsed time per record");
  verify->add_option("--records", va.records_file, "Extra registry file; records replace built-ins by id");
  verify->add_option("--perturb", va.perturb_index, "Fault injection: add --delta to the last side at this index");
  verify->add_option("--delta", va.perturb_delta, "Perturbation size (default 1)");

  std::size_t oracle_n = 0, oracle_t = 5, ceiling = qcore::kDefaultOracleCeiling;
  bool oracle_list = false;
  auto* oracle = app.add_subcommand("oracle", "Count t-cores of n by hook numbers");
  oracle->add_option("n", oracle_n)->required();
  oracle->add_option("t", oracle_t)->required()->check(CLI::PositiveNumber);
  oracle->add_option("--ceiling", ceiling, "Largest n the enumeration accepts");
  oracle->add_flag("--list", oracle_list, "Print the t-cores");

  std::string census_name = "b5";
  std::optional<std::size_t> census_order;
  auto* census = app.add_subcommand("census", "Sign frequencies over n = 1..N");
  census->add_option("sequence", census_name, "c5 | a5 | b5 (default b5)");
  census->add_option("-N,--order", census_order, "Upper index (default 10000)");

  auto* bfile = app.add_subcommand("bfile", "OEIS b-file export and check");
  bfile->require_subcommand(1);
  std::string bf_name, bf_path;
  std::size_t bf_order = 0;
  auto* bf_export = bfile->add_subcommand("export", "Write n a(n) lines for n = 0..N");
  bf_export->add_option("series", bf_name)->required();
  bf_export->add_option("N", bf_order)->required();
  bf_export->add_option("-o,--output", bf_path, "Output path (default stdout)");
  std::string bfc_name, bfc_path;
  auto* bf_check = bfile->add_subcommand("check", "Compare a local b-file against generated values");
  bf_check->add_option("series", bfc_name)->required();
  bf_check->add_option("path", bfc_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*expand) return cmd_expand(expand_name, expand_order, format);
    if (*verify) {
      va.format = format;
      return cmd_verify(va);
    }
    if (*oracle) return cmd_oracle(oracle_n, oracle_t, ceiling, oracle_list, format);
    if (*census) return cmd_census(census_name, census_order, format);
    if (*bf_export) return cmd_bfile_export(bf_name, bf_order, bf_path);
    if (*bf_check) return cmd_bfile_check(bfc_name, bfc_path);
  } catch (const qcore::BFileError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const qcore::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const qcore::RegistryError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const qcore::OracleScaleExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
