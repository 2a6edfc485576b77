#pragma once

#include "kstab/report.hpp"
#include "kstab/stab.hpp"
#include "kstab/walls.hpp"

#include "json.hpp"

namespace kstab {

// ordered_json keeps emission order = insertion order, which together with
// exact "p/q" rendering makes every output byte-deterministic.
using json = nlohmann::ordered_json;

json rational_json(const Rational& x);
Rational rational_from(const json& j);

json charge_json(const Charge& z);
json slope_json(const Slope& s);

json charvec_json(const CharVec& v);
CharVec charvec_from(const json& j);

json region_json(const Region& r);
Region region_from(const json& j);

json certificate_json(const Certificate& c);
Certificate certificate_from(const json& j);

json object_json(const ObjectDescriptor& o);
ObjectDescriptor object_from(const json& j);

json wall_json(const WallDescriptor& w);

json report_json(const VerificationReport& r);

}  // namespace kstab
