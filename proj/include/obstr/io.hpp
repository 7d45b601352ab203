#pragma once
#include <optional>
#include <string>

#include <json.hpp>

#include "obstr/certificate.hpp"
#include "obstr/design.hpp"
#include "obstr/tensor.hpp"

namespace obstr {

using Json = nlohmann::ordered_json;

// "p" or "p/q"
std::string rat_str(const Rat& q);
Rat rat_parse(const std::string& s);

// Tensor files carry explicit entries, a rank-one decomposition, or both;
// when both are present they must agree.
struct TensorFile {
    std::optional<SparseTensor3> tensor;
    std::optional<Rank1Decomposition> decomposition;

    const std::array<int, 3>& dims() const;
};

Json tensor_to_json(const Rank1Decomposition& d, bool include_entries = true);
Json tensor_to_json(const SparseTensor3& t);
TensorFile tensor_from_json(const Json& j);

Json design_to_json(const ObstructionDesign& h);
ObstructionDesign design_from_json(const Json& j);

// certificate-level integers are decimal strings; nested design and
// tensor objects keep their own schemas
Json certificate_to_json(const BoundCertificate& c);
BoundCertificate certificate_from_json(const Json& j);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

} // namespace obstr
