#include "capax/spec_io.hpp"

#include "capax/bumps.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <stdexcept>

namespace capax {

const char* kCodeVersion = "capax 1.0.0";

namespace {

void require_fields(const Json& j, const std::set<std::string>& allowed) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!allowed.count(it.key()))
            throw std::invalid_argument("spec: unknown field '" + it.key() + "'");
    }
}

double num(const Json& j, const std::string& key) {
    if (!j.contains(key)) throw std::invalid_argument("spec: missing field '" + key + "'");
    double v = j.at(key).get<double>();
    if (!std::isfinite(v)) throw std::invalid_argument("spec: non-finite number in '" + key + "'");
    return v;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

CurvePtr parse_curve(const Json& params) {
    std::string name = params.at("name").get<std::string>();
    CurvePtr base;
    if (name == "alpha") {
        base = std::make_shared<AlphaCurve>();
    } else if (name == "gamma-eps") {
        base = std::make_shared<GammaEpsCurve>(num(params, "eps"));
    } else if (name == "or-curve") {
        base = std::make_shared<OrCurve>(num(params, "p"));
    } else {
        throw std::invalid_argument("spec: unknown curve '" + name + "'");
    }
    if (params.contains("scale")) {
        double s = num(params, "scale");
        if (s != 1.0) base = std::make_shared<ScaledCurve>(base, s);
    }
    return base;
}

ProfilePtr parse_profile(const Json& params) {
    std::string name = params.at("name").get<std::string>();
    if (name == "pellipse")
        return std::make_shared<PellipseProfile>(num(params, "p"), num(params, "a"));
    if (name == "circle") return std::make_shared<CircleProfile>();
    if (name == "lpball2") return std::make_shared<LpBall2Profile>(num(params, "p"));
    if (name == "conic")
        return std::make_shared<ConicProfile>(num(params, "b"),
                                              params.contains("scale") ? num(params, "scale") : 1.0);
    if (name == "polyline") {
        std::vector<std::pair<double, double>> pts;
        for (const auto& p : params.at("points"))
            pts.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
        return std::make_shared<PolylineProfile>(std::move(pts));
    }
    if (name == "curve-graph")
        return std::make_shared<CurveGraphProfile>(parse_curve(params.at("curve")));
    throw std::invalid_argument("spec: unknown profile '" + name + "'");
}

std::vector<PerturbationSpec> parse_perturbations(const Json& arr) {
    std::vector<PerturbationSpec> out;
    for (const auto& p : arr) {
        require_fields(p, {"support", "plateau", "plateau_height", "integral", "amplitude"});
        double slo = p.at("support").at(0).get<double>();
        double shi = p.at("support").at(1).get<double>();
        double plo = 0, phi = 0, ph = 0;
        if (p.contains("plateau")) {
            plo = p.at("plateau").at(0).get<double>();
            phi = p.at("plateau").at(1).get<double>();
            ph = num(p, "plateau_height");
        }
        PerturbationSpec spec = make_bump(slo, shi, plo, phi, ph, num(p, "integral"));
        spec.epsilon = num(p, "amplitude");
        out.push_back(std::move(spec));
    }
    return out;
}

} // namespace

Domain parse_domain_spec(const Json& spec) {
    require_fields(spec, {"kind", "dimension", "params", "perturbations"});
    std::string kind = spec.at("kind").get<std::string>();
    int dim = spec.contains("dimension") ? spec.at("dimension").get<int>() : 2;
    const Json& params = spec.at("params");

    if (kind == "simplex" || kind == "box") {
        RealVec scales;
        for (const auto& s : params.at("scales")) {
            double v = s.get<double>();
            if (!std::isfinite(v) || v <= 0) throw std::invalid_argument("spec: bad scale");
            scales.push_back(v);
        }
        if (dim != static_cast<int>(scales.size()))
            throw std::invalid_argument("spec: dimension does not match scales");
        return kind == "simplex" ? Domain::simplex(scales) : Domain::box(scales);
    }
    if (kind == "lpball") return Domain::lp_ball(dim, num(params, "p"));
    if (kind == "pellipse") {
        auto prof = std::make_shared<PellipseProfile>(num(params, "p"), num(params, "a"));
        return Domain::graph(prof, Curvature::ConcaveCap, prof->a() == 1.0);
    }
    if (kind == "polytope") {
        std::vector<RealVec> verts;
        for (const auto& v : params.at("vertices")) {
            RealVec vert;
            for (const auto& c : v) vert.push_back(c.get<double>());
            if (static_cast<int>(vert.size()) != dim)
                throw std::invalid_argument("spec: vertex dimension mismatch");
            verts.push_back(std::move(vert));
        }
        return Domain::polytope(std::move(verts));
    }
    if (kind == "curve") return Domain::curve(parse_curve(params));
    if (kind == "graph") {
        ProfilePtr prof = parse_profile(params.at("profile"));
        if (spec.contains("perturbations") && !spec.at("perturbations").empty()) {
            auto specs = parse_perturbations(spec.at("perturbations"));
            prof = std::make_shared<PerturbedProfile>(prof, std::move(specs));
        }
        Curvature curv = params.contains("curvature")
            && params.at("curvature").get<std::string>() == "convex-cup"
            ? Curvature::ConvexCup : Curvature::ConcaveCap;
        GraphDomain g{prof, curv, false};
        g.symmetric = validate(Domain(g)).symmetric;
        return Domain(g);
    }
    throw std::invalid_argument("spec: unknown kind '" + kind + "'");
}

Domain parse_domain_spec_text(const std::string& text) {
    return parse_domain_spec(Json::parse(text));
}

namespace {

Json curve_json(const Curve& c);

Json profile_json(const Profile& p) {
    Json j;
    j["name"] = p.kind();
    if (auto* pe = dynamic_cast<const PellipseProfile*>(&p)) {
        j["p"] = pe->p();
        j["a"] = pe->a();
    } else if (auto* lp = dynamic_cast<const LpBall2Profile*>(&p)) {
        j["p"] = lp->p();
    } else if (auto* co = dynamic_cast<const ConicProfile*>(&p)) {
        j["b"] = co->b();
        j["scale"] = co->scale();
    } else if (auto* pl = dynamic_cast<const PolylineProfile*>(&p)) {
        Json pts = Json::array();
        for (const auto& pt : pl->points()) pts.push_back({pt.first, pt.second});
        j["points"] = pts;
    } else if (auto* cg = dynamic_cast<const CurveGraphProfile*>(&p)) {
        j["curve"] = curve_json(*cg->curve());
    }
    return j;
}

Json curve_json(const Curve& c) {
    Json j;
    if (auto* sc = dynamic_cast<const ScaledCurve*>(&c)) {
        j = curve_json(*sc->base());
        j["scale"] = sc->scale();
        return j;
    }
    j["name"] = c.kind();
    if (auto* ge = dynamic_cast<const GammaEpsCurve*>(&c)) j["eps"] = ge->eps();
    if (auto* oc = dynamic_cast<const OrCurve*>(&c)) j["p"] = oc->p();
    return j;
}

} // namespace

Json serialize_domain(const Domain& dom) {
    Json j;
    j["kind"] = dom.kind();
    j["dimension"] = dom.dimension();
    Json params;
    if (const auto* s = dom.get_if<SimplexDomain>()) params["scales"] = s->scales;
    else if (const auto* b = dom.get_if<BoxDomain>()) params["scales"] = b->scales;
    else if (const auto* l = dom.get_if<LpBallDomain>()) params["p"] = l->p;
    else if (const auto* p = dom.get_if<PolytopeDomain>()) params["vertices"] = p->vertices;
    else if (const auto* c = dom.get_if<CurveDomain>()) params = curve_json(*c->curve);
    else if (const auto* g = dom.get_if<GraphDomain>()) {
        const Profile* prof = g->profile.get();
        Json perts = Json::array();
        if (auto* pp = dynamic_cast<const PerturbedProfile*>(prof)) {
            for (const auto& s : pp->specs()) {
                Json pj;
                pj["support"] = {s.bump.support_lo(), s.bump.support_hi()};
                pj["plateau"] = {s.plateau_lo, s.plateau_hi};
                pj["plateau_height"] = s.plateau_height;
                pj["integral"] = s.integral;
                pj["amplitude"] = s.epsilon;
                perts.push_back(pj);
            }
            prof = pp->base().get();
        }
        params["profile"] = profile_json(*prof);
        params["curvature"] = g->curvature == Curvature::ConvexCup ? "convex-cup" : "concave-cap";
        j["params"] = params;
        j["perturbations"] = perts;
        return j;
    }
    j["params"] = params;
    j["perturbations"] = Json::array();
    return j;
}

std::string to_canonical_text(const Json& j) {
    // fixed float formatting with 12 significant digits
    Json copy = j;
    std::function<void(Json&)> walk = [&](Json& node) {
        if (node.is_object() || node.is_array()) {
            for (auto& child : node) walk(child);
        } else if (node.is_number_float()) {
            double v = node.get<double>();
            double r = std::stod(fmt(v));
            node = r;
        }
    };
    walk(copy);
    return copy.dump(2) + "\n";
}

std::string spec_hash(const Json& spec) {
    std::string text = to_canonical_text(spec);
    unsigned long long h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", h);
    return buf;
}

Json ResultRecord::to_json() const {
    Json j;
    j["version"] = kCodeVersion;
    j["spec_hash"] = spec_hash;
    j["command"] = command;
    j["k_range"] = {k_lo, k_hi};
    j["values"] = values;
    Json cv = Json::array(), cp = Json::array();
    for (const auto& v : carrier_vectors) cv.push_back(v);
    for (const auto& p : carrier_points) cp.push_back(p);
    j["carrier_vectors"] = cv;
    j["carrier_points"] = cp;
    j["engine"] = engine;
    if (!oracle.empty()) {
        j["oracle"] = oracle;
        j["max_oracle_diff"] = max_oracle_diff;
    }
    j["tolerance"] = tolerance;
    j["wall_time_sec"] = wall_time_sec;
    return j;
}

} // namespace capax
