#include "tropper/homology.hpp"

#include <json.hpp>
#include <stdexcept>

namespace tropper {

void validate_complex(const ChainComplex& c) {
  size_t top = c.dims.size();
  if (c.boundary.size() != top)
    throw std::invalid_argument("need one boundary map per chain group");
  for (size_t q = 1; q < top; ++q) {
    const IntMat& d = c.boundary[q];
    if (d.cols != c.dims[q] || d.rows != c.dims[q - 1])
      throw std::invalid_argument("boundary " + std::to_string(q) + " has wrong shape");
    if (q >= 2) {
      IntMat sq = c.boundary[q - 1] * d;
      for (const Integer& x : sq.a)
        if (x != 0) throw std::domain_error("boundary squared is nonzero");
    }
  }
}

HomologyGroup homology(const ChainComplex& c, int q) {
  validate_complex(c);
  if (q < 0 || q >= static_cast<int>(c.dims.size()))
    throw std::invalid_argument("no chain group in degree " + std::to_string(q));
  int out_rank = 0;
  if (q >= 1) out_rank = smith_normal_form(c.boundary[q]).rank();
  HomologyGroup h;
  h.rank = c.dims[q] - out_rank;
  if (q + 1 < static_cast<int>(c.dims.size())) {
    SmithForm sf = smith_normal_form(c.boundary[q + 1]);
    h.rank -= sf.rank();
    for (const Integer& d : sf.divisors())
      if (d > 1) h.torsion.push_back(d);
  }
  return h;
}

ChainComplex circle_with_monodromy(const IntMat& t, int segments) {
  if (t.rows != t.cols) throw std::invalid_argument("monodromy matrix must be square");
  if (segments < 1) throw std::invalid_argument("need at least one segment");
  int n = t.rows;
  ChainComplex c;
  c.dims = {segments * n, segments * n};
  c.boundary.resize(2);
  // Edge e_i runs from vertex i to vertex i+1 mod `segments`; the last edge
  // transports fibers by the monodromy matrix.
  IntMat d(segments * n, segments * n);
  for (int i = 0; i < segments; ++i) {
    int head = (i + 1) % segments;
    for (int r = 0; r < n; ++r) {
      d.at(i * n + r, i * n + r) -= 1;
      if (i + 1 == segments)
        for (int k = 0; k < n; ++k) d.at(head * n + r, i * n + k) += t.at(r, k);
      else
        d.at(head * n + r, i * n + r) += 1;
    }
  }
  c.boundary[1] = d;
  return c;
}

ChainComplex complex_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  auto to_mat = [](const nlohmann::json& m) {
    IntMat out(static_cast<int>(m.size()), m.empty() ? 0 : static_cast<int>(m[0].size()));
    for (int r = 0; r < out.rows; ++r)
      for (int c = 0; c < out.cols; ++c) out.at(r, c) = Integer(m[r][c].get<long>());
    return out;
  };
  if (j.contains("circle_monodromy"))
    return circle_with_monodromy(to_mat(j["circle_monodromy"]), j.value("segments", 3));
  ChainComplex c;
  for (const auto& d : j.at("dims")) c.dims.push_back(d.get<int>());
  for (const auto& m : j.at("boundary"))
    c.boundary.push_back(m.is_null() ? IntMat() : to_mat(m));
  if (!c.boundary.empty() && c.boundary[0].rows == 0 && !c.dims.empty())
    c.boundary[0] = IntMat(0, c.dims[0]);
  validate_complex(c);
  return c;
}

}  // namespace tropper
