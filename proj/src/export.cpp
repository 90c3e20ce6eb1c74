#include "cfladder/export.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace cfl {

namespace {

using nlohmann::ordered_json;

void put_meta(std::ostringstream& out, const ExportMeta& meta) {
  for (const auto& [key, value] : meta) {
    out << "# " << key << ": " << value << "\n";
  }
}

ordered_json meta_object(const ExportMeta& meta) {
  ordered_json obj = ordered_json::object();
  for (const auto& [key, value] : meta) obj[key] = value;
  return obj;
}

std::string tail_label(long key) {
  return key == kKuzminTailKey ? std::string(">") + std::to_string(kKuzminCap)
                               : std::to_string(key);
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string expand_csv(const Expansion& exp, const ExportMeta& meta) {
  std::ostringstream out;
  put_meta(out, meta);
  out << "n,b_n,p_n,q_n\n";
  for (int n = 0; n <= exp.max_index(); ++n) {
    const auto& [p, q] = exp.convergent(n);
    out << n << ',' << exp.quotient(n) << ',' << p << ',' << q << "\n";
  }
  return out.str();
}

nlohmann::ordered_json expand_json(const Expansion& exp,
                                   const ExportMeta& meta) {
  ordered_json doc;
  doc["meta"] = meta_object(meta);
  doc["rows"] = ordered_json::array();
  for (int n = 0; n <= exp.max_index(); ++n) {
    const auto& [p, q] = exp.convergent(n);
    doc["rows"].push_back({{"n", n},
                           {"b_n", to_string(exp.quotient(n))},
                           {"p_n", to_string(p)},
                           {"q_n", to_string(q)}});
  }
  return doc;
}

std::string ladder_csv(const Ladder& lad, const ExportMeta& meta) {
  std::ostringstream out;
  put_meta(out, meta);
  out << "# connections: " << lad.connections.size() << "\n";
  out << "i,n,k,r,s,t,value,lower,upper\n";
  int i = 0;
  for (const auto& c : lad.connections) {
    out << ++i << ',' << c.n << ',' << c.k << ',' << c.r << ',' << c.s << ','
        << c.t << ',' << c.value << ',' << c.lower << ',' << c.upper << "\n";
  }
  return out.str();
}

nlohmann::ordered_json ladder_json(const Ladder& lad, const ExportMeta& meta) {
  ordered_json doc;
  doc["meta"] = meta_object(meta);
  doc["meta"]["connections"] = lad.connections.size();
  doc["rows"] = ordered_json::array();
  int i = 0;
  for (const auto& c : lad.connections) {
    doc["rows"].push_back({{"i", ++i},
                           {"n", c.n},
                           {"k", c.k},
                           {"r", to_string(c.r)},
                           {"s", to_string(c.s)},
                           {"t", to_string(c.t)},
                           {"value", to_string(c.value)},
                           {"lower", to_string(c.lower)},
                           {"upper", to_string(c.upper)}});
  }
  return doc;
}

std::string figure3_csv(const Ladder& lad, const ExportMeta& meta) {
  std::ostringstream out;
  put_meta(out, meta);
  out << "i,n_minus_k\n";
  int i = 0;
  for (const auto& c : lad.connections) {
    out << ++i << ',' << (c.n - c.k) << "\n";
  }
  return out.str();
}

nlohmann::ordered_json figure3_json(const Ladder& lad,
                                    const ExportMeta& meta) {
  ordered_json doc;
  doc["meta"] = meta_object(meta);
  doc["rows"] = ordered_json::array();
  int i = 0;
  for (const auto& c : lad.connections) {
    doc["rows"].push_back({{"i", ++i}, {"n_minus_k", c.n - c.k}});
  }
  return doc;
}

std::string stats_csv(const KuzminReport& rep, const ExportMeta& meta) {
  std::ostringstream out;
  put_meta(out, meta);
  out << "k,count,empirical,expected,deviation\n";
  for (const auto& [key, count] : rep.counts) {
    const double emp = rep.empirical.at(key);
    const double exp = rep.expected.at(key);
    out << tail_label(key) << ',' << count << ',' << format_double(emp) << ','
        << format_double(exp) << ',' << format_double(emp - exp) << "\n";
  }
  return out.str();
}

nlohmann::ordered_json stats_json(const KuzminReport& rep,
                                  const ExportMeta& meta) {
  ordered_json doc;
  doc["meta"] = meta_object(meta);
  doc["rows"] = ordered_json::array();
  for (const auto& [key, count] : rep.counts) {
    const double emp = rep.empirical.at(key);
    const double exp = rep.expected.at(key);
    ordered_json row;
    if (key == kKuzminTailKey) {
      row["k"] = tail_label(key);
    } else {
      row["k"] = key;
    }
    row["count"] = count;
    row["empirical"] = emp;
    row["expected"] = exp;
    row["deviation"] = emp - exp;
    doc["rows"].push_back(std::move(row));
  }
  return doc;
}

std::string ladder_svg(const Ladder& lad) {
  const int rows_xi = lad.exp_xi.max_index();
  const int rows_eta = lad.exp_eta.max_index();
  const int rows = std::max(rows_xi, rows_eta);
  const int dy = 16, top = 24, width = 320;
  const int height = top + dy * rows + 16;
  const Integer big = 2 * lad.m + 1;
  const auto row_y = [&](int i) { return top + dy * i; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
      << height << "\">\n";
  out << "<style>text{font-family:monospace;font-size:11px}"
         ".idx{fill:#999}.big{font-weight:bold;fill:#a00}</style>\n";
  out << "<text class=\"idx\" x=\"44\" y=\"16\" text-anchor=\"end\">n</text>\n"
         "<text x=\"104\" y=\"16\" text-anchor=\"end\">b_n</text>\n"
         "<text x=\"216\" y=\"16\">B_k</text>\n"
         "<text class=\"idx\" x=\"276\" y=\"16\">k</text>\n";
  for (const auto& c : lad.connections) {
    out << "<line x1=\"112\" y1=\"" << row_y(c.n) << "\" x2=\"208\" y2=\""
        << row_y(c.k) << "\" stroke=\"#555\" stroke-width=\"1\"/>\n";
  }
  for (int n = 1; n <= rows_xi; ++n) {
    const bool em = lad.exp_xi.quotient(n) >= big;
    out << "<text class=\"idx\" x=\"44\" y=\"" << row_y(n) + 4
        << "\" text-anchor=\"end\">" << n << "</text>";
    out << "<text x=\"104\" y=\"" << row_y(n) + 4 << "\" text-anchor=\"end\""
        << (em ? " class=\"big\"" : "") << ">" << lad.exp_xi.quotient(n)
        << "</text>\n";
  }
  for (int k = 1; k <= rows_eta; ++k) {
    const bool em = lad.exp_eta.quotient(k) >= big;
    out << "<text x=\"216\" y=\"" << row_y(k) + 4 << "\""
        << (em ? " class=\"big\"" : "") << ">" << lad.exp_eta.quotient(k)
        << "</text>";
    out << "<text class=\"idx\" x=\"276\" y=\"" << row_y(k) + 4 << "\">" << k
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace cfl
