#ifndef EVEX_EVAL_HPP_
#define EVEX_EVAL_HPP_

// Precision / recall / F-measure over (document, surface, role) items.
// Surfaces compare case-insensitively.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "evex/error.hpp"
#include "evex/text.hpp"

namespace evex::eval {

struct Counts {
  long tp = 0;
  long fp = 0;
  long fn = 0;
  long tn = 0;  // always 0: the universe of non-events is open

  Counts& operator+=(const Counts& o) {
    tp += o.tp;
    fp += o.fp;
    fn += o.fn;
    tn += o.tn;
    return *this;
  }
  bool operator==(const Counts&) const = default;
};

/// TP / (TP + FP). With no predictions: 1 if there is also no gold, else 0.
inline double precision(const Counts& c) {
  if (c.tp + c.fp == 0) return c.fn == 0 ? 1.0 : 0.0;
  return static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp);
}

/// TP / (TP + FN). With no gold: 1 if there are also no predictions, else 0.
inline double recall(const Counts& c) {
  if (c.tp + c.fn == 0) return c.fp == 0 ? 1.0 : 0.0;
  return static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
}

inline double f_measure(double p, double r) { return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r); }

inline double f_measure(const Counts& c) { return f_measure(precision(c), recall(c)); }

/// Percentage text with round-half-up at `decimals` places.
inline std::string percent(double ratio, int decimals = 0) {
  double scale = 1.0;
  for (int i = 0; i < decimals; ++i) scale *= 10.0;
  // The small epsilon absorbs binary representation error at exact halves.
  double v = std::floor(ratio * 100.0 * scale + 0.5 + 1e-9) / scale;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

struct Item {
  std::string doc;
  std::string surface;  // lowercase
  std::string role;

  auto operator<=>(const Item&) const = default;
};

inline Item make_item(std::string_view doc, std::string_view surface, std::string_view role) {
  return Item{std::string(doc), text::lower(text::squeeze(surface)), std::string(role)};
}

inline Counts match(const std::set<Item>& predicted, const std::set<Item>& gold) {
  Counts c;
  for (const auto& p : predicted) (gold.count(p) ? c.tp : c.fp) += 1;
  for (const auto& g : gold)
    if (!predicted.count(g)) c.fn += 1;
  return c;
}

/// `docid<TAB>surface<TAB>role` lines, '#' comments.
inline std::set<Item> parse_gold(std::string_view content, const std::string& source = "") {
  std::set<Item> out;
  auto ls = text::lines(content);
  for (std::size_t i = 0; i < ls.size(); ++i) {
    std::string_view line = ls[i];
    if (text::trim(line).empty() || text::trim(line).front() == '#') continue;
    auto cols = text::split(line, '\t');
    if (cols.size() != 3)
      throw Error(Errc::Syntax, "expected 'docid<TAB>surface<TAB>role', found " + std::to_string(cols.size()) +
                                    " column(s)",
                  SourceLocation{source, i + 1, 1});
    for (std::size_t k = 0; k < 3; ++k)
      if (text::trim(cols[k]).empty())
        throw Error(Errc::Syntax, "empty column " + std::to_string(k + 1), SourceLocation{source, i + 1, 1});
    out.insert(make_item(text::trim(cols[0]), cols[1], text::trim(cols[2])));
  }
  return out;
}

inline std::set<Item> load_gold(const std::string& path) { return parse_gold(text::read_file(path), path); }

struct Report {
  std::map<std::string, Counts> per_doc;
  std::map<std::string, Counts> per_role;
  Counts total;
};

/// Per-document and per-role counts plus the micro-averaged total. Every
/// document and role seen on either side gets a row; `roles` adds rows for
/// roles that appear on neither side.
inline Report score(const std::set<Item>& predicted, const std::set<Item>& gold,
                    const std::vector<std::string>& roles = {}) {
  Report r;
  for (const auto& role : roles) r.per_role[role];
  for (const auto& p : predicted) {
    bool hit = gold.count(p) != 0;
    (hit ? r.per_doc[p.doc].tp : r.per_doc[p.doc].fp) += 1;
    (hit ? r.per_role[p.role].tp : r.per_role[p.role].fp) += 1;
  }
  for (const auto& g : gold) {
    r.per_doc[g.doc];
    r.per_role[g.role];
    if (!predicted.count(g)) {
      r.per_doc[g.doc].fn += 1;
      r.per_role[g.role].fn += 1;
    }
  }
  for (const auto& [doc, c] : r.per_doc) r.total += c;
  return r;
}

inline std::string format_ratio(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

/// CSV with columns file,tp,fp,fn,precision,recall,f and a TOTAL row.
inline std::string report_csv(const Report& r) {
  std::string out = "file,tp,fp,fn,precision,recall,f\n";
  auto row = [&](const std::string& name, const Counts& c) {
    out += name + "," + std::to_string(c.tp) + "," + std::to_string(c.fp) + "," + std::to_string(c.fn) + "," +
           format_ratio(precision(c)) + "," + format_ratio(recall(c)) + "," + format_ratio(f_measure(c)) + "\n";
  };
  for (const auto& [doc, c] : r.per_doc) row(doc, c);
  row("TOTAL", r.total);
  return out;
}

inline std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

/// Human-readable per-file and per-role tables. Roles with no predicted
/// and no gold items show a dash.
inline std::string report_text(const Report& r, int decimals = 0) {
  std::size_t w = 5;
  for (const auto& [doc, c] : r.per_doc) w = std::max(w, doc.size());
  for (const auto& [role, c] : r.per_role) w = std::max(w, role.size());
  w += 2;
  auto pct = [&](double v) { return pad(percent(v, decimals) + "%", 10); };
  std::string out = pad("File", w) + pad("P", 10) + pad("R", 10) + "F\n";
  for (const auto& [doc, c] : r.per_doc)
    out += pad(doc, w) + pct(precision(c)) + pct(recall(c)) + percent(f_measure(c), decimals) + "%\n";
  out += pad("Total", w) + pct(precision(r.total)) + pct(recall(r.total)) + percent(f_measure(r.total), decimals) +
         "%\n\n";
  out += pad("Role", w) + pad("P", 10) + pad("TP", 6) + pad("FP", 6) + "FN\n";
  for (const auto& [role, c] : r.per_role) {
    bool empty = c.tp == 0 && c.fp == 0 && c.fn == 0;
    out += pad(role, w) + (empty ? pad("—", 12) : pct(precision(c))) + pad(std::to_string(c.tp), 6) +
           pad(std::to_string(c.fp), 6) + std::to_string(c.fn) + "\n";
  }
  return out;
}

}  // namespace evex::eval

#endif  // EVEX_EVAL_HPP_
