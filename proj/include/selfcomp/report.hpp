#pragma once

// Reports behind the command-line tool: per-box method comparison, the
// verification sweep, SVG file selection and the remark experiment, with
// JSON / CSV / text serialization. JSON uses nlohmann::json.

#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "box.hpp"
#include "budget.hpp"
#include "enumeration.hpp"
#include "formulas.hpp"
#include "paths.hpp"
#include "plane_partition.hpp"
#include "remark.hpp"
#include "svg.hpp"

namespace selfcomp {

using Json = nlohmann::ordered_json;

enum class Method { Closed, BruteForce, Paths, MinorSum, Pfaffian, All };
enum class Format { Json, Csv, Text };

inline constexpr std::array<Method, 5> kMethods{Method::Closed, Method::BruteForce, Method::Paths, Method::MinorSum,
                                                Method::Pfaffian};

inline std::string method_name(Method m) {
  switch (m) {
    case Method::Closed: return "closed";
    case Method::BruteForce: return "bruteforce";
    case Method::Paths: return "paths";
    case Method::MinorSum: return "minorsum";
    case Method::Pfaffian: return "pfaffian";
    case Method::All: return "all";
  }
  return "?";
}

inline Method parse_method(const std::string& s) {
  for (Method m : {Method::Closed, Method::BruteForce, Method::Paths, Method::MinorSum, Method::Pfaffian, Method::All})
    if (method_name(m) == s) return m;
  throw std::invalid_argument("unknown method '" + s + "'");
}

inline Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "text") return Format::Text;
  throw std::invalid_argument("unknown format '" + s + "'");
}

struct RunConfig {
  BoxDims dims;
  Method method = Method::All;
  Budget budget;
  Format format = Format::Text;
  bool timing = false;
};

struct MethodResult {
  Method method = Method::Closed;
  std::string status = "skipped";  // ok | not_applicable | budget_exceeded | skipped
  std::optional<BigInt> value;     // signed, except for closed (magnitude)
  std::string message;
  double millis = 0;
};

struct CountReport {
  BoxDims input;
  NormalizedBox normalized;
  ClosedForm closed;
  std::vector<MethodResult> methods;  // in kMethods order
  std::optional<int> empirical_sign;
  bool agreement = true;
  bool budget_exceeded = false;
  std::string note;

  const MethodResult& result(Method m) const {
    for (const auto& r : methods)
      if (r.method == m) return r;
    throw std::out_of_range("method not in report");
  }
};

inline BigInt run_signed(Method m, const BoxDims& dims, const Budget& budget) {
  switch (m) {
    case Method::BruteForce: return signed_count_pp(dims, budget);
    case Method::Paths: return signed_count_paths(dims, budget);
    case Method::MinorSum: return minor_sum(dims, budget);
    case Method::Pfaffian: return pfaffian_method(dims);
    default: break;
  }
  throw std::logic_error("not a signed method");
}

/// Runs the selected methods and compares them.
inline CountReport run_count(const RunConfig& cfg) {
  CountReport rep;
  rep.input = cfg.dims;
  rep.normalized = normalize(cfg.dims);
  rep.closed = minus_one_closed(cfg.dims);
  const bool all_odd = rep.normalized.parity == ParityCase::OOO;
  if (all_odd) rep.note = "all sides odd: there are no self-complementary plane partitions";

  std::optional<BigInt> common;
  for (Method m : kMethods) {
    MethodResult r;
    r.method = m;
    if (cfg.method != Method::All && cfg.method != m) {
      rep.methods.push_back(r);
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    if (m == Method::Closed) {
      r.status = "ok";
      r.value = rep.closed.magnitude;
    } else if (all_odd && m != Method::BruteForce) {
      r.status = "not_applicable";
      r.message = "path model needs a box with an even side";
    } else {
      try {
        r.value = run_signed(m, cfg.dims, cfg.budget);
        r.status = "ok";
      } catch (const BudgetExceeded& e) {
        r.status = "budget_exceeded";
        r.message = e.what();
        rep.budget_exceeded = true;
      }
    }
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (m != Method::Closed && r.value) {
      if (!common) common = r.value;
      if (*common != *r.value) rep.agreement = false;
      if (abs(*r.value) != rep.closed.magnitude) rep.agreement = false;
    }
    rep.methods.push_back(r);
  }
  if (common) rep.empirical_sign = *common > 0 ? 1 : (*common < 0 ? -1 : 0);
  return rep;
}

inline std::string sign_text(const std::optional<int>& s) {
  if (!s) return "";
  return *s > 0 ? "+" : (*s < 0 ? "-" : "0");
}

inline Json dims_json(const BoxDims& d) { return Json{{"a", d.a}, {"b", d.b}, {"c", d.c}}; }

inline Json to_json(const CountReport& rep, bool timing) {
  Json j;
  j["input"] = dims_json(rep.input);
  Json norm = dims_json(rep.normalized.dims);
  norm["parity"] = std::string(to_string(rep.normalized.parity));
  norm["permutation"] = Json::array({rep.normalized.perm[0], rep.normalized.perm[1], rep.normalized.perm[2]});
  j["normalized"] = norm;
  j["closed_form"] = {{"magnitude", to_string(rep.closed.magnitude)}, {"provably_zero", rep.closed.provably_zero}};
  Json methods = Json::object();
  for (const auto& r : rep.methods) {
    Json m;
    m["status"] = r.status;
    m["value"] = r.value ? Json(to_string(*r.value)) : Json(nullptr);
    m["message"] = r.message.empty() ? Json(nullptr) : Json(r.message);
    if (timing) m["timing_ms"] = r.millis;
    methods[method_name(r.method)] = m;
  }
  j["methods"] = methods;
  j["empirical_sign"] = rep.empirical_sign ? Json(sign_text(rep.empirical_sign)) : Json(nullptr);
  j["agreement"] = rep.agreement;
  j["note"] = rep.note.empty() ? Json(nullptr) : Json(rep.note);
  return j;
}

inline std::string format_count(const CountReport& rep, Format fmt, bool timing) {
  std::ostringstream os;
  switch (fmt) {
    case Format::Json:
      os << to_json(rep, timing).dump(2) << '\n';
      break;
    case Format::Csv:
      os << "a,b,c,method,status,value" << (timing ? ",timing_ms" : "") << '\n';
      for (const auto& r : rep.methods) {
        os << rep.input.a << ',' << rep.input.b << ',' << rep.input.c << ',' << method_name(r.method) << ','
           << r.status << ',' << (r.value ? to_string(*r.value) : "");
        if (timing) os << ',' << r.millis;
        os << '\n';
      }
      break;
    case Format::Text: {
      const auto& n = rep.normalized;
      os << "box " << rep.input.a << 'x' << rep.input.b << 'x' << rep.input.c << "  normalized " << n.a() << 'x'
         << n.b() << 'x' << n.c() << "  parity " << to_string(n.parity) << "  permutation " << n.perm[0] << ' '
         << n.perm[1] << ' ' << n.perm[2] << '\n';
      for (const auto& r : rep.methods) {
        os << "  " << method_name(r.method);
        for (std::size_t pad = method_name(r.method).size(); pad < 12; ++pad) os << ' ';
        if (r.value)
          os << to_string(*r.value);
        else
          os << r.status;
        if (r.method == Method::Closed && r.value) os << " (magnitude" << (rep.closed.provably_zero ? ", zero class" : "") << ')';
        if (timing && r.status == "ok") os << "  [" << r.millis << " ms]";
        if (!r.message.empty() && r.status != "ok") os << "  " << r.message;
        os << '\n';
      }
      if (rep.empirical_sign) os << "  sign        " << sign_text(rep.empirical_sign) << '\n';
      os << "  agreement   " << (rep.agreement ? "yes" : "NO") << '\n';
      if (!rep.note.empty()) os << "  note        " << rep.note << '\n';
      break;
    }
  }
  return os.str();
}

/// 0 ok, 1 disagreement (method=all only), 2 budget exceeded.
inline int count_exit_code(const CountReport& rep, Method selected) {
  if (selected == Method::All && !rep.agreement) return 1;
  if (rep.budget_exceeded) return 2;
  return 0;
}

// ---------------------------------------------------------------------------
// verification sweep

struct VerifyRow {
  CountReport count;
  std::optional<BigInt> sc_brute;
  BigInt sc_stanley;
  BigInt sc_pfaffian;
  bool zero_flag_ok = true;
  bool ordinary_ok = true;
  bool passed = true;
  bool budget_exceeded = false;
};

struct VerifyReport {
  std::int64_t max_cells = 0;
  std::optional<ParityCase> parity;
  std::vector<VerifyRow> rows;

  std::size_t passed() const {
    std::size_t n = 0;
    for (const auto& r : rows) n += r.passed ? 1 : 0;
    return n;
  }
  std::size_t budget_hits() const {
    std::size_t n = 0;
    for (const auto& r : rows) n += r.budget_exceeded ? 1 : 0;
    return n;
  }
};

/// Boxes with positive sides and a*b*c <= max_cells, lexicographic in (a, b, c).
inline std::vector<BoxDims> sweep_boxes(std::int64_t max_cells, std::optional<ParityCase> parity = {}) {
  std::vector<BoxDims> out;
  for (std::int64_t a = 1; a <= max_cells; ++a)
    for (std::int64_t b = 1; a * b <= max_cells; ++b)
      for (std::int64_t c = 1; a * b * c <= max_cells; ++c) {
        const BoxDims d{a, b, c};
        if (parity && normalize(d).parity != *parity) continue;
        out.push_back(d);
      }
  return out;
}

inline VerifyRow verify_box(const BoxDims& d, const Budget& budget) {
  VerifyRow row;
  row.count = run_count({d, Method::All, budget, Format::Json, false});
  row.zero_flag_ok = row.count.closed.provably_zero == (row.count.closed.magnitude == 0);
  row.sc_stanley = stanley_SC(d);
  row.sc_pfaffian = ord_pfaffian(d);
  try {
    row.sc_brute = count_sc(d, budget);
  } catch (const BudgetExceeded&) {
    row.budget_exceeded = true;
  }
  row.ordinary_ok = row.sc_stanley == row.sc_pfaffian && (!row.sc_brute || *row.sc_brute == row.sc_stanley);
  row.budget_exceeded = row.budget_exceeded || row.count.budget_exceeded;
  row.passed = row.count.agreement && row.zero_flag_ok && row.ordinary_ok && !row.budget_exceeded;
  return row;
}

inline VerifyReport run_verify(std::int64_t max_cells, std::optional<ParityCase> parity, const Budget& budget) {
  VerifyReport rep{max_cells, parity, {}};
  for (const auto& d : sweep_boxes(max_cells, parity)) rep.rows.push_back(verify_box(d, budget));
  return rep;
}

/// 0 all pass, 1 some box failed, 2 only budget guards tripped.
inline int verify_exit_code(const VerifyReport& rep) {
  bool failed = false;
  for (const auto& r : rep.rows) failed = failed || (!r.passed && !r.budget_exceeded);
  if (failed) return 1;
  return rep.budget_hits() > 0 ? 2 : 0;
}

inline std::string opt_string(const std::optional<BigInt>& v) { return v ? to_string(*v) : ""; }

inline std::string format_verify(const VerifyReport& rep, Format fmt) {
  std::ostringstream os;
  if (fmt == Format::Json) {
    Json j;
    j["max_cells"] = rep.max_cells;
    j["parity"] = rep.parity ? Json(std::string(to_string(*rep.parity))) : Json(nullptr);
    Json rows = Json::array();
    for (const auto& r : rep.rows) {
      Json row = to_json(r.count, false);
      row["ordinary"] = {{"bruteforce", r.sc_brute ? Json(to_string(*r.sc_brute)) : Json(nullptr)},
                         {"stanley", to_string(r.sc_stanley)},
                         {"pfaffian", to_string(r.sc_pfaffian)},
                         {"agreement", r.ordinary_ok}};
      row["zero_flag_consistent"] = r.zero_flag_ok;
      row["passed"] = r.passed;
      rows.push_back(row);
    }
    j["boxes"] = rows;
    j["summary"] = {{"boxes", rep.rows.size()},
                    {"passed", rep.passed()},
                    {"failed", rep.rows.size() - rep.passed()},
                    {"budget_exceeded", rep.budget_hits()}};
    os << j.dump(2) << '\n';
    return os.str();
  }
  const char* sep = fmt == Format::Csv ? "," : " ";
  if (fmt == Format::Csv)
    os << "a,b,c,parity,closed,bruteforce,paths,minorsum,pfaffian,sc_bruteforce,sc_stanley,sc_pfaffian,result\n";
  for (const auto& r : rep.rows) {
    const auto& c = r.count;
    os << c.input.a << sep << c.input.b << sep << c.input.c << sep << to_string(c.normalized.parity);
    for (Method m : kMethods) {
      const auto& mr = c.result(m);
      os << sep << (mr.value ? to_string(*mr.value) : (mr.status == "not_applicable" ? "n/a" : mr.status));
    }
    os << sep << opt_string(r.sc_brute) << sep << to_string(r.sc_stanley) << sep << to_string(r.sc_pfaffian) << sep
       << (r.passed ? "pass" : (r.budget_exceeded ? "budget" : "FAIL")) << '\n';
  }
  if (fmt == Format::Text)
    os << rep.rows.size() << " boxes, " << rep.passed() << " passed, " << rep.rows.size() - rep.passed()
       << " not passed\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// rendering

struct RenderedFile {
  std::string filename;
  std::string svg;
};

struct RenderSelector {
  enum Kind { Index, All, Reference } kind = Reference;
  std::int64_t index = 0;
};

inline std::string box_tag(const BoxDims& d) {
  return std::to_string(d.a) + "x" + std::to_string(d.b) + "x" + std::to_string(d.c);
}

/// SVG documents for the selected self-complementary partitions, signed
/// relative to the half-full reference of `dims` as given.
inline std::vector<RenderedFile> render_files(const BoxDims& dims, const RenderSelector& sel, const Budget& budget = {}) {
  const auto sign_word = [](int s) { return s > 0 ? "plus" : "minus"; };
  std::vector<RenderedFile> out;
  if (dims.a % 2 == 1 && dims.b % 2 == 1 && dims.c % 2 == 1) {
    if (sel.kind == RenderSelector::All) return out;
    throw std::out_of_range("no self-complementary plane partitions in a box with all sides odd");
  }
  const HeightMatrix ref = reference_pp(dims);
  if (sel.kind == RenderSelector::Reference) {
    out.push_back({"sc_" + box_tag(dims) + "_reference_plus.svg", render_svg(ref, {1, std::nullopt})});
    return out;
  }
  const auto all = collect_sc(dims, budget);
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (sel.kind == RenderSelector::Index && static_cast<std::int64_t>(k) != sel.index) continue;
    const int s = sign_of(all[k], ref);
    out.push_back({"sc_" + box_tag(dims) + "_" + std::to_string(k) + "_" + sign_word(s) + ".svg",
                   render_svg(all[k], {s, static_cast<std::int64_t>(k)})});
  }
  if (sel.kind == RenderSelector::Index && out.empty())
    throw std::out_of_range("index " + std::to_string(sel.index) + " out of range: box has " +
                            std::to_string(all.size()) + " self-complementary plane partitions");
  return out;
}

// ---------------------------------------------------------------------------
// remark experiment

/// Parses "0..4" or "0,1,2,5" into a nonempty list of nonnegative integers.
inline std::vector<std::int64_t> parse_grid(const std::string& spec) {
  const auto number = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9)
      throw std::invalid_argument("malformed grid '" + spec + "'");
    return static_cast<std::int64_t>(std::stoll(s));
  };
  std::vector<std::int64_t> out;
  const auto dots = spec.find("..");
  if (dots != std::string::npos) {
    const auto lo = number(spec.substr(0, dots));
    const auto hi = number(spec.substr(dots + 2));
    if (hi < lo) throw std::invalid_argument("malformed grid '" + spec + "'");
    for (auto v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(number(item));
  if (out.empty() || spec.back() == ',') throw std::invalid_argument("malformed grid '" + spec + "'");
  return out;
}

inline std::string format_remark(const RemarkReport& rep, Format fmt) {
  std::ostringstream os;
  const auto var_name = [](std::size_t v) { return kRemarkVariables[v]; };
  const auto roots_text = [](const Factorization& f) {
    std::string s;
    for (const auto& r : f.roots) s += (s.empty() ? "" : " ") + to_string(r);
    return s;
  };
  if (fmt == Format::Json) {
    Json j;
    j["a"] = rep.a;
    j["b"] = rep.b;
    j["grid"] = rep.grid;
    Json slices = Json::array();
    for (const auto& s : rep.slices) {
      Json fixed = Json::object();
      for (std::size_t v = 0; v < 4; ++v)
        if (v != s.variable) fixed[var_name(v)] = s.fixed[v];
      Json roots = Json::array();
      for (const auto& r : s.factors.roots) roots.push_back(to_string(r));
      slices.push_back({{"variable", var_name(s.variable)},
                        {"fixed", fixed},
                        {"degree_bound", s.degree_bound},
                        {"polynomial", format_poly(s.polynomial, var_name(s.variable))},
                        {"leading", to_string(s.factors.constant)},
                        {"roots", roots},
                        {"residual", format_poly(s.factors.residual, var_name(s.variable))},
                        {"splits", s.factors.splits()},
                        {"bound_verified", s.bound_verified}});
    }
    j["slices"] = slices;
    j["summary"] = {{"slices", rep.slices.size()}, {"split", rep.split_count()}, {"all_split", rep.all_split()}};
    os << j.dump(2) << '\n';
    return os.str();
  }
  if (fmt == Format::Csv) os << "variable,m1,m2,n1,n2,degree_bound,polynomial,roots,splits\n";
  for (const auto& s : rep.slices) {
    const char* v = var_name(s.variable);
    if (fmt == Format::Csv) {
      os << v;
      for (std::size_t k = 0; k < 4; ++k) os << ',' << (k == s.variable ? std::string(v) : std::to_string(s.fixed[k]));
      os << ',' << s.degree_bound << ",\"" << format_poly(s.polynomial, v) << "\",\"" << roots_text(s.factors) << "\","
         << (s.factors.splits() ? "yes" : "no") << '\n';
      continue;
    }
    os << v << " |";
    for (std::size_t k = 0; k < 4; ++k)
      if (k != s.variable) os << ' ' << var_name(k) << '=' << s.fixed[k];
    os << " : " << format_poly(s.polynomial, v);
    if (s.factors.splits())
      os << "  [linear factors; roots " << (s.factors.roots.empty() ? "none" : roots_text(s.factors)) << ']';
    else
      os << "  [residual " << format_poly(s.factors.residual, v) << ']';
    if (!s.bound_verified) os << "  [degree bound check failed]";
    os << '\n';
  }
  if (fmt == Format::Text)
    os << "a=" << rep.a << " b=" << rep.b << ": " << rep.split_count() << " of " << rep.slices.size()
       << " slices split into linear factors\n";
  return os.str();
}

}  // namespace selfcomp
