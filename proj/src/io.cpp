#include "symsemi/io.hpp"

#include "symsemi/errors.hpp"

#include <fstream>
#include <sstream>

namespace symsemi::io {

using nlohmann::json;

namespace {

Rational rational_field(const json& v, const std::string& where) {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw ParseError(where + ": expected a rational string");
}

const json& field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing \"" + key + "\"");
    return j.at(key);
}

SparseMat matrix_field(const json& j, std::size_t rows, std::size_t cols, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected a list of rows");
    if (j.size() != rows)
        throw ShapeMismatch(where + ": expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
    SparseMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& r = j[i];
        if (!r.is_array() || r.size() != cols)
            throw ShapeMismatch(where + ": row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) m.set(i, c, rational_field(r[c], where));
    }
    return m;
}

SymplecticModel parse_matrix_model(const json& j, const std::string& name) {
    const json& dj = field(j, "dims", name);
    if (!dj.is_array() || dj.empty()) throw ParseError(name + ": \"dims\" must be a nonempty list");
    std::vector<std::size_t> dims;
    for (const auto& x : dj) {
        if (!x.is_number_integer() || x.get<long>() < 0) throw ParseError(name + ": dims must be nonnegative integers");
        dims.push_back(x.get<std::size_t>());
    }
    auto dim = [&](std::size_t k) -> std::size_t { return k < dims.size() ? dims[k] : 0; };
    const int manifold_dim = field(j, "manifold_dim", name).get<int>();

    const json& d = field(j, "d", name);
    if (!d.is_array()) throw ParseError(name + ": \"d\" must be a list");
    std::vector<SparseMat> ds;
    for (std::size_t k = 0; k < d.size() && k + 1 < dims.size(); ++k)
        ds.push_back(matrix_field(d[k], dim(k + 1), dim(k), name + " d[" + std::to_string(k) + "]"));
    if (d.size() + 1 < dims.size()) throw ShapeMismatch(name + ": \"d\" needs " + std::to_string(dims.size() - 1) + " matrices");
    GradedComplex c(dims, std::move(ds));

    std::vector<SparseMat> ws;
    if (j.contains("omega")) {
        const json& w = j.at("omega");
        if (!w.is_array()) throw ParseError(name + ": \"omega\" must be a list");
        if (w.size() > dims.size()) throw ShapeMismatch(name + ": omega has more degrees than the complex");
        for (std::size_t k = 0; k < w.size(); ++k)
            ws.push_back(matrix_field(w[k], dim(k + 2), dim(k), name + " omega[" + std::to_string(k) + "]"));
    }
    OmegaMap om(c, std::move(ws));
    SymplecticModel m = make_model(name, std::move(c), std::move(om), manifold_dim);
    m.omega_text = "omega map from file";
    return m;
}

std::vector<std::string> name_list(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": monomial must be a list of generator names");
    std::vector<std::string> out;
    for (const auto& x : j) {
        if (!x.is_string()) throw ParseError(where + ": generator names must be strings");
        out.push_back(x.get<std::string>());
    }
    return out;
}

Element parse_terms(const CDGAModel& algebra, const json& j, int degree, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected a list of [coefficient, [names]] terms");
    Element e;
    e.degree = degree;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2) throw ParseError(where + ": each term is [coefficient, [names]]");
        const Element w = algebra.word(name_list(t[1], where));
        if (w.degree != degree && !w.is_zero())
            throw ShapeMismatch(where + ": term has degree " + std::to_string(w.degree) + ", expected " +
                                std::to_string(degree));
        e += rational_field(t[0], where) * w;
        e.degree = degree;
    }
    return e;
}

SymplecticModel parse_cdga_model(const json& j, const std::string& name) {
    const int manifold_dim = field(j, "manifold_dim", name).get<int>();
    const json& gj = field(j, "generators", name);
    if (!gj.is_array()) throw ParseError(name + ": \"generators\" must be a list");
    std::vector<Generator> gens;
    bool all_degree_one = true;
    for (const auto& g : gj) {
        gens.push_back({field(g, "name", name).get<std::string>(), field(g, "degree", name).get<int>()});
        if (gens.back().degree != 1) all_degree_one = false;
    }
    // differential-free copy used only to normalize words
    const CDGAModel free_algebra(gens, {}, manifold_dim);
    std::vector<Element> diff(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) diff[i].degree = gens[i].degree + 1;
    if (j.contains("differential")) {
        const json& dj = j.at("differential");
        if (!dj.is_object()) throw ParseError(name + ": \"differential\" must map generator names to terms");
        for (const auto& [gname, terms] : dj.items()) {
            const std::size_t i = free_algebra.generator_index(gname);
            diff[i] = parse_terms(free_algebra, terms, gens[i].degree + 1, name + " d(" + gname + ")");
        }
    }
    std::optional<CDGAModel> model;
    try {
        model.emplace(gens, diff, manifold_dim);
    } catch (const NotAComplex& e) {
        if (all_degree_one) throw JacobiViolation(e.message());
        throw;
    }
    const Element w = parse_terms(*model, field(j, "omega", name), 2, name + " omega");
    return make_model(name, std::move(*model), w);
}

} // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SymplecticModel parse_model(const json& j, const std::string& name) {
    try {
        const std::string kind = field(j, "kind", name).get<std::string>();
        if (kind == "matrix") return parse_matrix_model(j, name);
        if (kind == "cdga") return parse_cdga_model(j, name);
        throw ParseError(name + ": unknown model kind '" + kind + "'");
    } catch (const json::exception& e) {
        throw ParseError(name + ": " + e.what());
    }
}

SymplecticModel load_model(const std::string& spec) {
    const std::string prefix = "builtin:";
    if (spec.rfind(prefix, 0) == 0) return builtin(spec.substr(prefix.size()));
    json j;
    try {
        j = json::parse(read_file(spec));
    } catch (const json::exception& e) {
        throw ParseError(spec + ": " + e.what());
    }
    return parse_model(j, spec);
}

ZeroCensus parse_census(const json& j) {
    try {
        if (!j.is_object()) throw ParseError("census must be a JSON object");
        const std::string source = j.value("source", std::string{});
        const bool nonvanishing = j.value("nonvanishing", false);
        std::vector<ZeroRecord> zeros;
        if (j.contains("zeros")) {
            if (!j.at("zeros").is_array()) throw ParseError("census \"zeros\" must be a list");
            for (const auto& z : j.at("zeros"))
                zeros.push_back({z.value("label", std::string{}), parse_det_sign(z.value("det_sign", std::string{}))});
        }
        return ZeroCensus(source, nonvanishing, std::move(zeros));
    } catch (const json::exception& e) {
        throw ParseError(std::string("census: ") + e.what());
    }
}

json census_to_json(const ZeroCensus& c) {
    json zs = json::array();
    for (const auto& z : c.zeros()) zs.push_back({{"label", z.label}, {"det_sign", det_sign_name(z.det_sign)}});
    return {{"source", c.source()}, {"nonvanishing", c.nonvanishing()}, {"zeros", zs}};
}

ZeroCensus load_census(const std::string& path) {
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return parse_census(j);
}

SparseMat parse_matrix_text(const std::string& text) {
    std::vector<std::vector<Rational>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        for (char& ch : line)
            if (ch == ',' || ch == ';' || ch == '\t') ch = ' ';
        std::istringstream ls(line);
        std::vector<Rational> row;
        std::string tok;
        while (ls >> tok) row.push_back(Rational::parse(tok));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("matrix file has no rows");
    const std::size_t cols = rows.front().size();
    for (const auto& r : rows)
        if (r.size() != cols) throw ParseError("matrix rows have different lengths");
    return SparseMat::from_dense(rows, cols);
}

SparseMat load_matrix_text(const std::string& path) { return parse_matrix_text(read_file(path)); }

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        const auto b = tok.find_first_not_of(" \t");
        const auto e = tok.find_last_not_of(" \t");
        if (b == std::string::npos) throw ParseError("empty entry in list '" + text + "'");
        out.push_back(Rational::parse(tok.substr(b, e - b + 1)));
    }
    return out;
}

} // namespace symsemi::io
