#pragma once

// JSON encodings for the command-line front end. Rationals are written as
// strings "a/b", charges as "a+b*i", K-classes as integer arrays.

#include "json.hpp"

#include "invstab/chambers.hpp"
#include "invstab/hearts.hpp"
#include "invstab/kronecker.hpp"

namespace invstab {

using Json = nlohmann::ordered_json;

Json to_json(const KClass& v);
Json to_json(const QuotClass& v);
Json to_json(const QMatrix& m);
Json to_json(const KroneckerRep& M);
Json to_json(const Heart& h);
Json to_json(const StableCatalogEntry& e);
Json to_json(const Crossing& c);
Json to_json(const HNFactor& f);
Json to_json(const PencilBlock& b);

/// Reads {p, q, field, A, B}; field defaults to "Q". Throws
/// std::invalid_argument on malformed input.
KroneckerRep rep_from_json(const Json& j);

}  // namespace invstab
