#ifndef WITTSWAN_IO_HPP
#define WITTSWAN_IO_HPP

#include "json.hpp"
#include "wittswan/sympow.hpp"

namespace wittswan {

// ordered_json keeps insertion order, so field order in the output is the
// order written here and byte-for-byte stable across runs
using Json = nlohmann::ordered_json;

// ---- payload parsing (CLI input) ----

// parse JSON text; parse errors are rethrown as invalid_argument with the
// byte position preserved in the message
Json parse_payload_text(const std::string& text);

// [[e, c], ...] with integer exponent e and integer coefficient c
LaurentPoly laurent_from_json(const Json& j, int p, const std::string& var = "t");

// [component, component, ...], one per Witt slot; [] is the zero component
WittLaurent witt_from_json(const Json& j, const WittCtx& ctx);
WittLaurent witt_from_text(const std::string& text, const WittCtx& ctx);

// ---- serialization (CLI output) ----

Json ord_to_json(const Ord& v); // integer, or null for infinity
Json laurent_to_json(const LaurentPoly& f);
Json multilaurent_to_json(const MultiLaurentPoly& f); // [[[e1..ed], c], ...]
Json sfrac_to_json(const SFraction& f);               // {"num":..., "den_pow":...}
Json witt_laurent_to_json(const WittLaurent& a);
Json witt_sfrac_to_json(const WittVector<SFraction>& a);
Json omega_to_json(const OmegaForm& w); // coefficient list over dS_k/S_d

Json swan_to_json(const SwanCertificate& c);
Json rsw_to_json(const RswClass& r);
Json sympow_to_json(const SymSwanCertificate& c);
Json blprod_to_json(const ProdSwanCertificate& c);
Json anbasis_to_json(const AnBasisReport& r);

} // namespace wittswan

#endif
