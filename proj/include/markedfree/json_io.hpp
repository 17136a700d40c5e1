#pragma once

/// \file json_io.hpp
/// Exact JSON serialization for every artifact: rationals are "num/den"
/// strings everywhere; no binary formats, no floating point. Deserialization
/// re-validates and re-canonicalizes.

#include "markedfree/free_pair.hpp"
#include "markedfree/marked_space.hpp"
#include "markedfree/marking.hpp"
#include "markedfree/plmap.hpp"
#include "markedfree/slp.hpp"
#include "markedfree/thompson.hpp"
#include "markedfree/word.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace markedfree {

using json = nlohmann::json;

json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

json plmap_to_json(const PLMap& f);
PLMap plmap_from_json(const json& j);

json support_to_json(const SupportSet& s);

json word_to_json(const Word& w);
Word word_from_json(const json& j, int rank = 2);

json slp_to_json(const SlpWord& s);
SlpWord slp_from_json(const json& j);

json tree_pair_to_json(const TreePair& tp);

json check_report_to_json(const CheckReport& r);
json certificate_to_json(const FreePairCertificate& c);
FreePairCertificate certificate_from_json(const json& j);

json free_pair_to_json(const FreePair& fp);

json bundle_to_json(const MarkingBundle& b);
MarkingBundle bundle_from_json(const json& j);

json ball_certificate_to_json(const BallCertificate& c, const MarkingBundle& b);

json witness_to_json(const GenerationWitness& w, const MarkingBundle& b);

json distance_report_to_json(const DistanceReport& r);

json spectrum_to_json(const RelationSpectrum& s);

/// Tuple files: {"format": "markedfree.tuple/1", "maps": [PLMap...]}.
json tuple_to_json(const std::vector<PLMap>& maps);
std::vector<PLMap> tuple_from_json(const json& j);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

} // namespace markedfree
