#include "reglab/presentation_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace reglab {

namespace {

using nlohmann::json;

struct Tokenizer {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw parse_error("expected a number at position " +
                                            std::to_string(start) + " in '" + s + "'");
        return s.substr(start, pos - start);
    }
    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
            ++pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
        }
        if (start == pos) throw parse_error("expected an identifier at position " +
                                            std::to_string(start) + " in '" + s + "'");
        return s.substr(start, pos - start);
    }
};

// term := factor ('*' factor)*, factor := number['/'number] | var['^'number]
void parse_term(Tokenizer& tz, const Ring& ring, Polynomial& out, int sign) {
    Rational coeff(sign);
    Monomial mono(ring.var_count(), 0);
    for (;;) {
        char c = tz.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = tz.number();
            if (tz.eat('/')) {
                std::string den = tz.number();
                coeff *= Rational(num + "/" + den);
            } else {
                coeff *= Rational(num);
            }
            coeff.canonicalize();
        } else {
            std::string name = Tokenizer{tz.s, tz.pos}.ident();  // probe
            auto var = ring.var_index(name);
            if (!var) throw parse_error("unknown variable '" + name + "'");
            tz.ident();
            int exp = 1;
            if (tz.eat('^')) exp = std::stoi(tz.number());
            if (exp < 0) throw parse_error("negative exponent");
            mono[*var] += exp;
        }
        if (!tz.eat('*')) break;
    }
    out.add_term(mono, coeff);
}

}  // namespace

Polynomial parse_polynomial(const Ring& ring, const std::string& text) {
    Polynomial out(ring);
    Tokenizer tz{text};
    if (tz.done()) return out;
    int sign = 1;
    if (tz.eat('-')) sign = -1;
    else tz.eat('+');
    parse_term(tz, ring, out, sign);
    while (!tz.done()) {
        if (tz.eat('+')) sign = 1;
        else if (tz.eat('-')) sign = -1;
        else throw parse_error("expected '+' or '-' at position " + std::to_string(tz.pos) +
                               " in '" + text + "'");
        parse_term(tz, ring, out, sign);
    }
    return out;
}

namespace {

json ring_to_json(const Ring& ring) {
    json j;
    j["characteristic"] = ring.field().characteristic;
    j["variables"] = ring.variables();
    json rel = json::array();
    for (const auto& e : ring.power_relations()) {
        if (e)
            rel.push_back(*e);
        else
            rel.push_back(nullptr);
    }
    j["power_relations"] = rel;
    return j;
}

Ring ring_from_json(const json& j) {
    if (!j.contains("characteristic") || !j.contains("variables")) {
        throw parse_error("ring block needs 'characteristic' and 'variables'");
    }
    std::vector<std::string> vars = j.at("variables").get<std::vector<std::string>>();
    std::vector<std::optional<int>> rels;
    if (j.contains("power_relations")) {
        for (const auto& e : j.at("power_relations")) {
            if (e.is_null())
                rels.push_back(std::nullopt);
            else
                rels.push_back(e.get<int>());
        }
    }
    return Ring::make(FieldSpec(j.at("characteristic").get<std::uint32_t>()), std::move(vars),
                      std::move(rels));
}

}  // namespace

void save_presentation(const PresentedModule& module, std::ostream& os) {
    json j;
    j["ring"] = ring_to_json(module.ring());
    j["kind"] = module.kind == PresentedModule::Kind::cokernel ? "cokernel" : "kernel";
    json mod;
    mod["row_twists"] = module.map.codomain().twists();
    mod["col_twists"] = module.map.domain().twists();
    json rows = json::array();
    for (std::size_t i = 0; i < module.map.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < module.map.cols(); ++k) {
            row.push_back(module.map.entry(i, k).str());
        }
        rows.push_back(std::move(row));
    }
    mod["entries"] = std::move(rows);
    j["module"] = std::move(mod);
    os << j.dump(2) << "\n";
}

PresentedModule load_presentation(std::istream& is) {
    json j;
    try {
        is >> j;
    } catch (const json::exception& e) {
        throw parse_error(std::string("invalid presentation file: ") + e.what());
    }
    try {
        Ring ring = ring_from_json(j.at("ring"));
        std::string kind = j.at("kind").get<std::string>();
        if (kind != "cokernel" && kind != "kernel") {
            throw parse_error("kind must be 'cokernel' or 'kernel'");
        }
        const json& mod = j.at("module");
        std::vector<int> row_tw = mod.at("row_twists").get<std::vector<int>>();
        std::vector<int> col_tw = mod.at("col_twists").get<std::vector<int>>();
        const json& rows = mod.at("entries");
        if (rows.size() != row_tw.size()) throw parse_error("entry row count mismatch");
        std::vector<Polynomial> entries;
        entries.reserve(row_tw.size() * col_tw.size());
        for (const auto& row : rows) {
            if (row.size() != col_tw.size()) throw parse_error("entry column count mismatch");
            for (const auto& cell : row) {
                entries.push_back(parse_polynomial(ring, cell.get<std::string>()));
            }
        }
        GradedMatrix map(GradedFreeModule(ring, row_tw), GradedFreeModule(ring, col_tw),
                         std::move(entries));
        return kind == "cokernel" ? PresentedModule::cokernel(std::move(map))
                                  : PresentedModule::kernel(std::move(map));
    } catch (const json::exception& e) {
        throw parse_error(std::string("invalid presentation file: ") + e.what());
    }
}

PresentedModule load_presentation_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw parse_error("cannot open '" + path + "'");
    return load_presentation(f);
}

void save_presentation_file(const PresentedModule& module, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw parse_error("cannot write '" + path + "'");
    save_presentation(module, f);
}

std::string to_json(const RegularityReport& report) {
    json j;
    if (report.regularity)
        j["regularity"] = *report.regularity;
    else
        j["regularity"] = nullptr;
    if (report.indeg)
        j["indeg"] = *report.indeg;
    else
        j["indeg"] = nullptr;
    j["certified"] = report.certified;
    j["method"] = report.method == RegularityReport::Method::betti ? "betti"
                                                                   : "artinian_top_degree";
    return j.dump();
}

std::string to_json(const BettiTable& table) {
    json j;
    json entries = json::array();
    for (const auto& [jd, rank] : table.entries) {
        entries.push_back({{"j", jd.first}, {"d", jd.second}, {"rank", rank}});
    }
    j["entries"] = std::move(entries);
    j["degree_cap"] = table.degree_cap;
    j["homological_cap"] = table.homological_cap;
    j["complete"] = table.complete;
    return j.dump();
}

std::string to_json(const LinearFit& fit) {
    json j;
    j["parity"] = fit.parity;
    j["slope"] = fit.slope;
    if (fit.intercept)
        j["intercept"] = *fit.intercept;
    else
        j["intercept"] = nullptr;
    j["onset"] = fit.onset;
    j["verdict"] = fit.verdict == LinearFit::Verdict::eventually_linear
                       ? "eventually_linear"
                       : "not_linear_in_range";
    return j.dump();
}

}  // namespace reglab
