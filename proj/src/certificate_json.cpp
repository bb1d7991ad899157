#include "sylv/certificate_json.hpp"

#include <algorithm>

#include "sylv/error.hpp"

namespace sylv {

  nlohmann::json to_json(PathCertificate const& cert) {
    nlohmann::json out = nlohmann::json::array();
    for (PathStep const& s : cert.steps) {
      out.push_back({{"pre", to_string(s.pre.tree())},
                     {"x", to_string(s.witness.x)},
                     {"y", to_string(s.witness.y)},
                     {"post", to_string(s.post.tree())},
                     {"case", std::string(to_string(s.tag))}});
    }
    return out;
  }

  PathCertificate certificate_from_json(nlohmann::json const& j) {
    if (!j.is_array()) {
      throw InputError("certificate must be a JSON array");
    }
    struct Raw {
      Bst          pre, post;
      ShiftWitness witness;
      StepCase     tag;
    };
    std::vector<Raw> raw;
    Symbol           rank = 0;
    try {
      for (auto const& step : j) {
        Raw r{parse_tree(step.at("pre").get<std::string>()),
              parse_tree(step.at("post").get<std::string>()),
              {parse_word(step.at("x").get<std::string>()),
               parse_word(step.at("y").get<std::string>())},
              parse_step_case(step.at("case").get<std::string>())};
        rank = std::max({rank, r.pre.max_label(), r.post.max_label()});
        raw.push_back(std::move(r));
      }
    } catch (nlohmann::json::exception const& e) {
      throw InputError(std::string("malformed certificate: ") + e.what());
    }
    PathCertificate cert;
    for (Raw& r : raw) {
      cert.steps.push_back({SylvElement(rank, std::move(r.pre)),
                            std::move(r.witness),
                            SylvElement(rank, std::move(r.post)),
                            r.tag});
    }
    return cert;
  }

}  // namespace sylv
