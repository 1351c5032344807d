#include "hnk/serialize.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace hnk {

namespace {

using boost::multiprecision::cpp_int;

nlohmann::json int_to_json(const cpp_int& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

cpp_int int_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return cpp_int(j.get<long long>());
  if (j.is_string()) {
    try {
      return cpp_int(j.get<std::string>());
    } catch (const std::exception&) {
      throw std::domain_error("exact_from_json: bad integer string");
    }
  }
  throw std::domain_error("exact_from_json: entry component is not an integer");
}

Rational rational_from_json(const nlohmann::json& num, const nlohmann::json& den) {
  const cpp_int d = int_from_json(den);
  if (d == 0) throw std::domain_error("exact_from_json: zero denominator");
  return Rational(int_from_json(num)) / Rational(d);
}

}  // namespace

nlohmann::json to_json(const ExactMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const auto& s = m(i, j);
      entries.push_back({int_to_json(numerator(s.real())), int_to_json(denominator(s.real())),
                         int_to_json(numerator(s.imag())), int_to_json(denominator(s.imag()))});
    }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

ExactMatrix exact_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw std::domain_error("exact_from_json: expected {rows, cols, entries}");
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  const auto& entries = j.at("entries");
  if (rows < 0 || cols < 0 || !entries.is_array() ||
      static_cast<Eigen::Index>(entries.size()) != rows * cols)
    throw std::domain_error("exact_from_json: entries length != rows * cols");
  ExactMatrix m(rows, cols);
  for (Eigen::Index idx = 0; idx < rows * cols; ++idx) {
    const auto& e = entries[static_cast<std::size_t>(idx)];
    if (!e.is_array() || e.size() != 4)
      throw std::domain_error("exact_from_json: entry must be [num_re, den_re, num_im, den_im]");
    m(idx / cols, idx % cols) =
        GaussRational(rational_from_json(e[0], e[1]), rational_from_json(e[2], e[3]));
  }
  return m;
}

std::string pretty(const ExactMatrix& m, const std::vector<IndexSubset>& row_labels,
                   const std::vector<IndexSubset>& col_labels) {
  std::vector<std::string> rl, cl;
  for (const auto& s : row_labels) rl.push_back(s.to_string());
  for (const auto& s : col_labels) cl.push_back(s.to_string());
  rl.resize(static_cast<std::size_t>(m.rows()));
  cl.resize(static_cast<std::size_t>(m.cols()));

  std::size_t label_width = 0;
  for (const auto& s : rl) label_width = std::max(label_width, s.size());
  std::vector<std::size_t> width(cl.size());
  for (std::size_t j = 0; j < cl.size(); ++j) {
    width[j] = cl[j].size();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      width[j] = std::max(width[j], m(i, static_cast<Eigen::Index>(j)).to_string().size() + 1);
  }

  std::ostringstream out;
  auto pad = [&out](const std::string& s, std::size_t w) {
    out << std::string(w > s.size() ? w - s.size() : 0, ' ') << s;
  };
  pad("", label_width);
  for (std::size_t j = 0; j < cl.size(); ++j) {
    out << "  ";
    pad(cl[j], width[j]);
  }
  out << "\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    pad(rl[static_cast<std::size_t>(i)], label_width);
    for (std::size_t j = 0; j < cl.size(); ++j) {
      const auto& s = m(i, static_cast<Eigen::Index>(j));
      std::string text = s.to_string();
      if (s.is_real() && s.real() > 0) text = "+" + text;
      out << "  ";
      pad(text, width[j]);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace hnk
