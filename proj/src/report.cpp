#include <eulerprod/report.hpp>

#include <eulerprod/boundary.hpp>
#include <eulerprod/continuation.hpp>
#include <eulerprod/errors.hpp>
#include <eulerprod/gamma.hpp>
#include <eulerprod/geometry.hpp>
#include <eulerprod/toric.hpp>
#include <eulerprod/zeta.hpp>

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace eulerprod {

namespace {

const char *kSchemas = R"({
  "analyze": {
    "type": "object",
    "required": ["version", "seed", "input", "C", "gamma", "cyclotomy", "cyclotomic_factors", "faces", "classification"],
    "properties": {
      "version": {"type": "string"},
      "seed": {"type": "integer"},
      "input": {"type": "string"},
      "C": {"type": "string"},
      "gamma": {"type": "object", "required": ["B", "entries", "nonzero", "max_nonzero_norm", "bound_margin"]},
      "cyclotomy": {"type": "object", "required": ["kind", "bound_used"]},
      "cyclotomic_factors": {"type": "array"},
      "faces": {"type": "array", "items": {"type": "object",
                "required": ["e", "polar", "primitive", "lambda", "face_poly", "nondegenerate", "witness", "feasible", "boundary"]}},
      "classification": {"type": "string"}
    }
  },
  "gamma": {
    "type": "object",
    "required": ["input", "bound", "C", "entries"],
    "properties": {
      "input": {"type": "string"},
      "bound": {"type": "integer"},
      "C": {"type": "string"},
      "entries": {"type": "array", "items": {"type": "object", "required": ["beta", "gamma"]}}
    }
  },
  "eval": {
    "type": "object",
    "required": ["input", "point", "value", "delta", "m_delta", "beta_bound", "tail_bound", "factors_near_singularity"],
    "properties": {
      "input": {"type": "string"},
      "point": {"type": "array"},
      "value": {"type": "object", "required": ["re", "im"]},
      "delta": {"type": "number"},
      "m_delta": {"type": "integer"},
      "beta_bound": {"type": "integer"},
      "tail_bound": {"type": "number"},
      "factors_near_singularity": {"type": "array"}
    }
  },
  "zeros": {
    "type": "object",
    "required": ["input", "seed", "probe", "box", "pmax", "records", "skipped_primes", "candidates", "survivors", "ladder"],
    "properties": {
      "input": {"type": "string"},
      "seed": {"type": "integer"},
      "probe": {"type": "object", "required": ["face", "sigma0", "tau0", "theta", "e_prime"]},
      "box": {"type": "object", "required": ["u", "eta", "eps", "re_max"]},
      "pmax": {"type": "integer"},
      "records": {"type": "integer"},
      "skipped_primes": {"type": "integer"},
      "candidates": {"type": "integer"},
      "survivors": {"type": "integer"},
      "ladder": {"type": "array", "items": {"type": "object", "required": ["eps", "count", "survivors", "predicted"]}}
    }
  },
  "toric": {
    "type": "object",
    "required": ["version", "n", "v_poly", "terms", "zeta_prefactor", "domain", "boundary_faces", "faces", "all_faces_nondegenerate"],
    "properties": {
      "version": {"type": "string"},
      "n": {"type": "integer"},
      "v_poly": {"type": "string"},
      "terms": {"type": "integer"},
      "domain": {"type": "object", "required": ["delta", "inequalities"]},
      "faces": {"type": "array"},
      "all_faces_nondegenerate": {"type": "boolean"}
    }
  }
})";

bool type_matches(const Json &v, const std::string &t)
{
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    return false;
}

void check_node(const Json &schema, const Json &v, const std::string &where)
{
    auto fail = [&](const std::string &why) { throw Error(ErrorKind::SchemaViolation, where + ": " + why); };
    if (schema.contains("type") && !type_matches(v, schema["type"].get<std::string>()))
        fail("expected " + schema["type"].get<std::string>());
    if (schema.contains("required"))
        for (const auto &k : schema["required"])
            if (!v.contains(k.get<std::string>()))
                fail("missing key " + k.get<std::string>());
    if (schema.contains("properties"))
        for (const auto &[k, sub] : schema["properties"].items())
            if (v.contains(k))
                check_node(sub, v[k], where + "." + k);
    if (schema.contains("items") && v.is_array())
        for (std::size_t i = 0; i < v.size(); ++i)
            check_node(schema["items"], v[i], where + "[" + std::to_string(i) + "]");
}

cplx parse_complex(const Json &v)
{
    if (v.is_number())
        return {v.get<double>(), 0.0};
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
        return {v[0].get<double>(), v[1].get<double>()};
    if (v.is_object() && v.contains("re"))
        return {v["re"].get<double>(), v.value("im", 0.0)};
    throw Error(ErrorKind::InvalidArgument, "point coordinate must be a number, [re, im] or {\"re\", \"im\"}");
}

std::vector<cplx> parse_point(const std::string &text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw Error(ErrorKind::InvalidArgument, std::string("point is not valid JSON: ") + e.what());
    }
    if (!j.is_array() || j.empty())
        throw Error(ErrorKind::InvalidArgument, "point must be a non-empty JSON array");
    std::vector<cplx> s;
    for (const auto &x : j)
        s.push_back(parse_complex(x));
    return s;
}

std::string boundary_verdict(const Face &f, CyclotomyVerdict::Kind cyc)
{
    if (!f.feasible)
        return "not a boundary face";
    if (cyc == CyclotomyVerdict::Kind::Certificate)
        return "none: polynomial is cyclotomic";
    if (cyc == CyclotomyVerdict::Kind::Witness && f.nondegenerate)
        return "natural boundary certified";
    return "inconclusive";
}

} // namespace

Json report_schema(const std::string &command)
{
    static const Json all = Json::parse(kSchemas);
    if (!all.contains(command))
        throw Error(ErrorKind::InvalidArgument, "no schema for command " + command);
    return all[command];
}

void validate_report(const std::string &command, const Json &report)
{
    check_node(report_schema(command), report, command);
}

Json cmd_analyze(const std::string &input, const AnalyzeOptions &opt)
{
    const IntPoly h = parse_poly(input);
    Json j;
    j["version"] = kVersion;
    j["seed"] = opt.seed;
    j["input"] = render(h);
    const Rat C = c_of_h(h);
    j["C"] = rat_str(C);

    const auto table = gamma_table(h, opt.bound, opt.threads);
    long nonzero = 0, max_norm = 0;
    double worst = 0;
    for (const auto &e : table.entries) {
        if (e.gamma == 0)
            continue;
        ++nonzero;
        const long k = norm(e.beta);
        max_norm = std::max(max_norm, k);
        // |gamma| k C^k / tau(k), at most 1 by the coefficient bound
        Rat ck = 1;
        for (long i = 0; i < k; ++i)
            ck *= C;
        const Rat ratio = Rat(abs(e.gamma)) * k * ck / divisor_count(k);
        worst = std::max(worst, ratio.get_d());
    }
    j["gamma"] = {{"B", opt.bound}, {"entries", table.entries.size()}, {"nonzero", nonzero},
                  {"max_nonzero_norm", max_norm}, {"bound_margin", 1 - worst}};

    const auto verdict = cyclotomy_probe(h, 0, 8, opt.seed);
    j["cyclotomy"] = to_json(verdict);
    auto factors = Json::array();
    for (const auto &f : cyclotomic_factor_scan(h, opt.cyclotomic_scan_bound))
        factors.push_back({{"d", f.d}, {"lambda", f.lambda}});
    j["cyclotomic_factors"] = factors;

    auto faces = Json::array();
    long feasible = 0, certified = 0;
    for (const auto &f : enumerate_faces(h, opt.threads)) {
        Json fj = to_json(f);
        fj["feasible"] = f.feasible;
        fj["boundary"] = boundary_verdict(f, verdict.kind);
        feasible += f.feasible;
        certified += f.feasible && f.nondegenerate && verdict.kind == CyclotomyVerdict::Kind::Witness;
        faces.push_back(fj);
    }
    j["faces"] = faces;
    std::string cls;
    if (verdict.kind == CyclotomyVerdict::Kind::Certificate)
        cls = "cyclotomic: finite product of zeta factors, meromorphic on the whole space";
    else if (certified > 0)
        cls = "natural boundary at the boundary of W(0) (" + std::to_string(certified) + " of "
              + std::to_string(feasible) + " boundary faces nondegenerate)";
    else
        cls = "inconclusive";
    j["classification"] = cls;
    validate_report("analyze", j);
    return j;
}

Json cmd_gamma(const std::string &input, long bound, unsigned threads)
{
    const IntPoly h = parse_poly(input);
    const auto table = gamma_table(h, bound, threads);
    Json j;
    j["input"] = render(h);
    const Json t = to_json(table);
    j["bound"] = t["bound"];
    j["C"] = t["C"];
    j["entries"] = t["entries"];
    validate_report("gamma", j);
    return j;
}

std::string gamma_csv(const Json &rep)
{
    std::ostringstream out;
    out << "beta,norm,gamma\n";
    for (const auto &e : rep["entries"]) {
        std::string b;
        long k = 0;
        for (const auto &x : e["beta"]) {
            if (!b.empty())
                b += ' ';
            b += std::to_string(x.get<long>());
            k += x.get<long>();
        }
        out << b << ',' << k << ',' << e["gamma"].get<std::string>() << '\n';
    }
    return out.str();
}

Json cmd_eval(const std::string &input, const std::string &point, const EvalOptions &opt)
{
    const IntPoly h = parse_poly(input);
    const auto s = parse_point(point);
    const auto zeros = cached_zero_table(opt.zero_count, opt.zero_cache);
    ContinuationOptions co;
    co.B = opt.bound;
    co.zeros = &zeros;
    co.threads = opt.threads;
    if (opt.delta > 0)
        co.delta_override = opt.delta;
    const auto rep = eval_z_continued(h, s, co);
    Json j;
    j["input"] = render(h);
    auto pt = Json::array();
    for (const auto &z : s)
        pt.push_back(complex_json(z));
    j["point"] = pt;
    const Json body = to_json(rep);
    for (const auto &[k, v] : body.items())
        j[k] = v;
    if (opt.direct_cutoff > 0) {
        const auto d = eval_z_direct(h, s, opt.direct_cutoff);
        j["direct"] = {{"value", complex_json(d.value)}, {"tail_bound", d.tail_bound}, {"prime_cutoff", d.prime_cutoff},
                       {"difference", std::abs(d.value - rep.value)}};
    }
    validate_report("eval", j);
    return j;
}

ZerosOutput cmd_zeros(const std::string &input, const ZerosOptions &opt)
{
    const IntPoly h = parse_poly(input);
    const auto faces = enumerate_faces(h, opt.threads);
    std::optional<LineProbe> probe;
    if (opt.face > 0) {
        const std::size_t col = static_cast<std::size_t>(opt.face - 1);
        if (col >= h.nterms())
            throw Error(ErrorKind::InvalidArgument, "face index out of range");
        for (const auto &f : faces)
            if (std::find(f.lambda.begin(), f.lambda.end(), col) != f.lambda.end())
                probe = build_probe(h, f, opt.seed);
    } else {
        for (const auto &f : faces) {
            if (!f.feasible || !f.nondegenerate)
                continue;
            try {
                probe = build_probe(h, f, opt.seed);
                break;
            } catch (const Error &e) {
                if (e.kind() != ErrorKind::NoEPrime && e.kind() != ErrorKind::ArgDegenerate
                    && e.kind() != ErrorKind::GenericityExhausted)
                    throw;
            }
        }
        if (!probe)
            throw Error(ErrorKind::InvalidArgument, "no feasible nondegenerate face admits a line probe");
    }
    ZeroBox box{opt.u, opt.eta, opt.eps, opt.re_max};
    const auto scan = zeros_on_line(*probe, box, opt.pmax, opt.threads);
    const auto table = gamma_table(h, opt.bound, opt.threads);
    const auto zeros = cached_zero_table(opt.zero_count, opt.zero_cache);
    const auto cands = pole_candidates(*probe, table, zeros);
    const auto audit = collision_audit(scan.records, cands, opt.tolerance);

    ZerosOutput out;
    std::ostringstream csv;
    csv << "p,m,re_t,im_t,residual\n";
    char buf[160];
    for (const auto &r : scan.records) {
        std::snprintf(buf, sizeof buf, "%ld,%ld,%.17g,%.17g,%.3e\n", r.p, r.m, r.t.real(), r.t.imag(), r.residual);
        csv << buf;
    }
    out.csv = csv.str();

    Json j;
    j["input"] = render(h);
    j["seed"] = opt.seed;
    j["probe"] = to_json(*probe);
    j["box"] = {{"u", opt.u}, {"eta", opt.eta}, {"eps", opt.eps}, {"re_max", opt.re_max}};
    j["pmax"] = opt.pmax;
    j["records"] = scan.records.size();
    j["skipped_primes"] = scan.skipped_primes.size();
    j["candidates"] = cands.size();
    j["survivors"] = audit.survivors;
    j["near_collisions"] = audit.near.size();
    const double modc0 = std::pow(std::abs(probe->c), 1.0 / static_cast<double>(probe->N));
    auto ladder = Json::array();
    for (double eps : opt.ladder) {
        long count = 0, surv = 0;
        for (std::size_t i = 0; i < scan.records.size(); ++i)
            if (scan.records[i].t.real() > eps) {
                ++count;
                surv += audit.min_distance[i] > opt.tolerance;
            }
        Json row{{"eps", eps}, {"count", count}, {"survivors", surv}};
        if (probe->constant_branch && modc0 < 1)
            row["predicted"] = opt.eta / (2 * std::numbers::pi) * std::exp(-std::log(modc0) / eps);
        else
            row["predicted"] = nullptr;
        ladder.push_back(row);
    }
    j["ladder"] = ladder;
    validate_report("zeros", j);
    out.summary = j;
    return out;
}

Json cmd_toric(int n, unsigned threads)
{
    Json j;
    j["version"] = kVersion;
    const Json body = to_json(analyze_v_n(n, threads));
    for (const auto &[k, v] : body.items())
        j[k] = v;
    validate_report("toric", j);
    return j;
}

} // namespace eulerprod
