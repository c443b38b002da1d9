#include "metabelian/json_io.hpp"

#include <stdexcept>

namespace metabelian {

ordered_json to_json(const MagnusElement& m) {
  ordered_json j;
  j["S"] = m.s.exp;
  std::vector<std::string> gammas;
  gammas.reserve(m.gamma.size());
  for (const LaurentPoly& g : m.gamma) gammas.push_back(g.to_string());
  j["gamma"] = gammas;
  return j;
}

ordered_json to_json(const Certificate& cert) {
  ordered_json j;
  j["n"] = cert.rank;
  ordered_json steps = ordered_json::array();
  for (const CertificateStep& s : cert.steps) {
    steps.push_back({{"step", s.name}, {"verified", s.verified}, {"detail", s.detail}});
  }
  j["steps"] = steps;
  j["conclusion"] = cert.conclusion;
  return j;
}

ordered_json to_json(const SearchReport& report) {
  ordered_json j;
  j["n"] = report.rank;
  j["max_len"] = report.max_len;
  j["words_enumerated"] = report.words_enumerated;
  j["distinct_elements"] = report.distinct_elements;
  std::vector<std::string> fixed;
  fixed.reserve(report.fixed_points_found.size());
  for (const GroupWord& w : report.fixed_points_found) fixed.push_back(w.to_string());
  j["fixed_points_found"] = fixed;
  return j;
}

ordered_json to_json(const KernelReport& report) {
  ordered_json j;
  j["n"] = report.rank_n;
  j["max_degree"] = report.max_degree;
  ordered_json rows = ordered_json::array();
  for (const KernelReport::DegreeRow& r : report.rows) {
    rows.push_back({{"degree", r.degree},
                    {"dim", r.dim},
                    {"image_dim", r.image_dim},
                    {"rank", r.rank}});
  }
  j["degrees"] = rows;
  j["kernel_trivial"] = report.trivial;
  return j;
}

IAEndomorphism endomorphism_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("images")) {
    throw std::invalid_argument("endomorphism file must be {\"n\": int, \"images\": [...]}");
  }
  int n = j.at("n").get<int>();
  if (n < 1) throw std::invalid_argument("endomorphism rank must be at least 1");
  const auto& images_json = j.at("images");
  if (!images_json.is_array() || static_cast<int>(images_json.size()) != n) {
    throw std::invalid_argument("expected exactly " + std::to_string(n) + " images");
  }
  std::vector<GroupWord> images;
  images.reserve(images_json.size());
  for (const auto& entry : images_json) {
    images.push_back(parse_word(n, entry.get<std::string>()));
  }
  return IAEndomorphism::from_images(std::move(images));
}

}  // namespace metabelian
