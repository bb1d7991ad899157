#ifndef SYLV_CERTIFICATE_JSON_HPP
#define SYLV_CERTIFICATE_JSON_HPP

#include <cstddef>

#include "json.hpp"
#include "sylv/shift_path.hpp"

namespace sylv {

  // A certificate is a JSON array of steps:
  //   [{"pre": "<tree>", "x": "<word>", "y": "<word>",
  //     "post": "<tree>", "case": "case1"}, ...]
  // Trees use the nested label(left,right) form and words the usual text
  // form.
  [[nodiscard]] nlohmann::json to_json(PathCertificate const& cert);

  // The rank of the elements is the largest label seen (the trees are
  // standard). Throws InputError on malformed input.
  [[nodiscard]] PathCertificate certificate_from_json(nlohmann::json const& j);

}  // namespace sylv

#endif  // SYLV_CERTIFICATE_JSON_HPP
