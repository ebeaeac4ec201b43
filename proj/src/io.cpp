#include "wittswan/io.hpp"

namespace wittswan {

Json parse_payload_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("payload: ") + e.what());
    }
}

LaurentPoly laurent_from_json(const Json& j, int p, const std::string& var) {
    if (!j.is_array())
        throw std::invalid_argument("payload: expected an array of [exponent, coefficient] pairs");
    LaurentPoly f(p, var);
    size_t pos = 0;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer() ||
            !term[1].is_number_integer())
            throw std::invalid_argument("payload: term " + std::to_string(pos) +
                                        " is not an [exponent, coefficient] integer pair");
        f.add_term(term[0].get<long>(), term[1].get<long>());
        ++pos;
    }
    return f;
}

WittLaurent witt_from_json(const Json& j, const WittCtx& ctx) {
    if (!j.is_array())
        throw std::invalid_argument("payload: expected an array of Witt components");
    if (static_cast<int>(j.size()) != ctx->len)
        throw std::invalid_argument("payload: got " + std::to_string(j.size()) +
                                    " components, need " + std::to_string(ctx->len) +
                                    " for m = " + std::to_string(ctx->len - 1));
    std::vector<LaurentPoly> comps;
    comps.reserve(ctx->len);
    for (const auto& cj : j) comps.push_back(laurent_from_json(cj, ctx->p));
    return WittLaurent(ctx, std::move(comps));
}

WittLaurent witt_from_text(const std::string& text, const WittCtx& ctx) {
    return witt_from_json(parse_payload_text(text), ctx);
}

Json ord_to_json(const Ord& v) {
    if (v.is_inf()) return nullptr;
    return v.value();
}

Json laurent_to_json(const LaurentPoly& f) {
    Json out = Json::array();
    for (const auto& [e, c] : f.terms()) out.push_back(Json::array({e, c}));
    return out;
}

Json multilaurent_to_json(const MultiLaurentPoly& f) {
    Json out = Json::array();
    for (const auto& [ev, c] : f.terms()) out.push_back(Json::array({ev, c}));
    return out;
}

Json sfrac_to_json(const SFraction& f) {
    Json out;
    out["num"] = multilaurent_to_json(f.num());
    out["den_pow"] = f.den_pow();
    return out;
}

Json witt_laurent_to_json(const WittLaurent& a) {
    Json out = Json::array();
    for (const auto& c : a.comps()) out.push_back(laurent_to_json(c));
    return out;
}

Json witt_sfrac_to_json(const WittVector<SFraction>& a) {
    Json out = Json::array();
    for (const auto& c : a.comps()) out.push_back(sfrac_to_json(c));
    return out;
}

Json omega_to_json(const OmegaForm& w) {
    Json out = Json::array();
    for (const auto& c : w.coeffs()) out.push_back(sfrac_to_json(c));
    return out;
}

Json swan_to_json(const SwanCertificate& c) {
    Json out;
    out["swan"] = c.n;
    out["certified"] = c.certified;
    out["lower"] = c.lower;
    out["upper"] = c.upper;
    out["reduced"] = witt_laurent_to_json(c.reduced);
    out["witness"] = laurent_to_json(c.witness.coeff());
    return out;
}

Json rsw_to_json(const RswClass& r) {
    Json out;
    out["n"] = r.n;
    out["witness"] = laurent_to_json(r.witness.coeff());
    return out;
}

Json sympow_to_json(const SymSwanCertificate& c) {
    Json out;
    out["upstairs"] = c.upstairs;
    out["exceptional"] = c.n;
    out["certified"] = c.certified;
    out["lower"] = c.lower;
    out["upper"] = c.upper;
    out["pushforward"] = witt_sfrac_to_json(c.pushforward);
    out["witness"] = omega_to_json(c.witness);
    return out;
}

Json blprod_to_json(const ProdSwanCertificate& c) {
    Json out;
    out["n1"] = c.n1;
    out["n2"] = c.n2;
    out["exceptional"] = c.n;
    out["certified"] = c.certified;
    out["lower"] = c.lower;
    out["upper"] = c.upper;
    out["sum"] = Json::array();
    for (const auto& comp : c.sum_rep.comps()) out["sum"].push_back(multilaurent_to_json(comp));
    out["witness_x"] = multilaurent_to_json(c.witness.fx());
    out["witness_y"] = multilaurent_to_json(c.witness.gy());
    return out;
}

Json anbasis_to_json(const AnBasisReport& r) {
    Json out;
    out["d"] = r.d;
    out["j"] = r.j;
    out["p"] = r.p;
    out["entries_integral"] = r.entries_integral;
    out["det_val"] = ord_to_json(r.det_val);
    out["pass"] = r.pass;
    Json rows = Json::array();
    for (const auto& row : r.matrix) {
        Json cells = Json::array();
        for (const auto& cell : row) cells.push_back(sfrac_to_json(cell));
        rows.push_back(std::move(cells));
    }
    out["matrix"] = std::move(rows);
    return out;
}

} // namespace wittswan
