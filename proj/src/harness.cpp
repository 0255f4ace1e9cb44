#include "casimir/harness.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/parallel.hpp"

#include <json.hpp>

namespace casimir {
namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

struct kv_entry {
    std::string key;
    std::string value;
    int line;
};

struct kv_file {
    std::string path;
    std::string dir;
    std::vector<kv_entry> entries;

    const kv_entry* find(const std::string& key) const {
        for (const auto& e : entries)
            if (e.key == key) return &e;
        return nullptr;
    }
};

kv_file read_kv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open file: " + path);
    kv_file f;
    f.path = path;
    std::size_t slash = path.find_last_of('/');
    f.dir = slash == std::string::npos ? "." : path.substr(0, slash);
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw validation_error(path + ":" + std::to_string(n) + ": expected key = value");
        f.entries.push_back({trim(line.substr(0, eq)), trim(line.substr(eq + 1)), n});
    }
    return f;
}

double to_double(const kv_file& f, const kv_entry& e) {
    try {
        std::size_t used = 0;
        double v = std::stod(e.value, &used);
        if (trim(e.value.substr(used)).empty()) return v;
    } catch (...) {
    }
    throw validation_error(f.path + ": field '" + e.key + "': not a number: " + e.value);
}

std::string join_path(const std::string& dir, const std::string& rel) {
    if (!rel.empty() && rel.front() == '/') return rel;
    return dir + "/" + rel;
}

std::vector<double> parse_number_list(const kv_file& f, const kv_entry& e) {
    std::vector<double> out;
    std::string item;
    std::istringstream ss(e.value);
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        try {
            out.push_back(std::stod(item));
        } catch (...) {
            throw validation_error(f.path + ": field '" + e.key + "': bad number: " + item);
        }
    }
    return out;
}

oscillator_set gold_core_oscillators() {
    // interband fit reproducing tabulated eps_c(i xi) of gold
    return {{{7.091, 3.05, 0.75},
             {41.46, 4.15, 1.85},
             {2.700, 5.40, 1.00},
             {154.7, 8.50, 7.00},
             {44.55, 13.5, 6.00},
             {309.6, 21.5, 9.00}}};
}

material_spec make_metal(const std::string& name, double wp, double g, double mu0,
                         double v_ratio, core_permittivity core) {
    material_spec m;
    m.name = name;
    m.hbar_omega_p_ev = wp;
    m.hbar_gamma_ev = g;
    m.mu_static = mu0;
    m.v_tr = m.v_l = v_ratio * fermi_velocity(wp);
    m.core = std::move(core);
    m.validate();
    return m;
}

core_table load_core_table(const std::string& path) {
    value_table raw = load_value_table(path);
    core_table tab;
    tab.hbar_xi_ev = raw.a_m;
    tab.eps_c = raw.value;
    return tab;
}

scenario make_scenario(std::string id, double radius_m, material_spec m1, material_spec m2,
                       observable_kind obs, std::vector<double> grid) {
    scenario s;
    s.id = std::move(id);
    s.geometry = geometry_kind::sphere_plate;
    s.sphere.radius_m = radius_m;
    s.material1 = std::move(m1);
    s.material2 = std::move(m2);
    s.observable = obs;
    s.separations_m = std::move(grid);
    return s;
}

double model_rank(const std::vector<response_kind>& order, response_kind m) {
    auto it = std::find(order.begin(), order.end(), m);
    return static_cast<double>(it - order.begin());
}

void format_field(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    out += buf;
}

}  // namespace

void scenario::validate() const {
    material1.validate();
    material2.validate();
    if (separations_m.empty()) throw validation_error("scenario '" + id + "': empty separation grid");
    for (std::size_t i = 1; i < separations_m.size(); ++i) {
        if (separations_m[i] == separations_m[i - 1])
            throw validation_error("scenario '" + id + "': duplicate separation");
        if (separations_m[i] < separations_m[i - 1])
            throw validation_error("scenario '" + id + "': separations must be ascending");
    }
    for (double a : separations_m)
        if (!(a > 0.0)) throw validation_error("scenario '" + id + "': separations must be > 0");
    if (models.empty()) throw validation_error("scenario '" + id + "': no models selected");
    if (!(temperature_k > 0.0)) throw validation_error("scenario '" + id + "': T must be > 0");
    if (delta_omega_p < 0.0 || delta_gamma < 0.0)
        throw validation_error("scenario '" + id + "': uncertainties must be >= 0");
    bool needs_sphere =
        geometry == geometry_kind::sphere_plate || observable != observable_kind::pressure;
    if (needs_sphere && !(sphere.radius_m > 0.0))
        throw validation_error("scenario '" + id + "': sphere radius required");
    for (const auto& p : data)
        if (p.err_minus < 0.0 || p.err_plus < 0.0)
            throw validation_error("scenario '" + id + "': negative error arm in data");
}

const char* model_name(response_kind model) {
    switch (model) {
        case response_kind::drude: return "drude";
        case response_kind::plasma: return "plasma";
        case response_kind::nonlocal: return "nonlocal";
        case response_kind::user_local: return "local";
    }
    return "?";
}

response_kind parse_model(const std::string& name) {
    if (name == "drude") return response_kind::drude;
    if (name == "plasma") return response_kind::plasma;
    if (name == "nonlocal") return response_kind::nonlocal;
    if (name == "local") return response_kind::user_local;
    throw validation_error("unknown response model: " + name);
}

std::vector<response_kind> parse_models(const std::string& csv) {
    std::vector<response_kind> out;
    std::string item;
    std::istringstream ss(csv);
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        response_kind m = parse_model(item);
        if (std::find(out.begin(), out.end(), m) != out.end())
            throw validation_error("model listed twice: " + item);
        out.push_back(m);
    }
    if (out.empty()) throw validation_error("empty model list");
    return out;
}

std::vector<std::string> builtin_material_names() {
    return {"gold-decca", "gold-trench", "nickel"};
}

material_spec builtin_material(const std::string& name) {
    if (name == "gold-decca")
        return make_metal("gold-decca", 8.9, 0.0357, 1.0, 1.5, gold_core_oscillators());
    if (name == "gold-trench")
        return make_metal("gold-trench", 9.0, 0.035, 1.0, 1.5, gold_core_oscillators());
    if (name == "nickel")
        return make_metal("nickel", 4.89, 0.0436, 110.0, 1.5, std::monostate{});
    throw validation_error("unknown builtin material: " + name);
}

std::vector<std::string> builtin_scenario_names() {
    return {"decca-pressure", "trench-force", "afm-2011", "afm-upgraded", "au-ni", "ni-ni"};
}

scenario builtin_scenario(const std::string& id) {
    using ok = observable_kind;
    if (id == "decca-pressure")
        return make_scenario(id, 151.2e-6, builtin_material("gold-decca"),
                             builtin_material("gold-decca"), ok::pressure,
                             {200e-9, 300e-9, 400e-9, 500e-9, 620e-9, 746e-9});
    if (id == "trench-force")
        return make_scenario(id, 149.7e-6, builtin_material("gold-trench"),
                             builtin_material("gold-trench"), ok::force,
                             {1e-6, 3e-6, 5e-6, 7e-6});
    if (id == "afm-2011")
        return make_scenario(id, 41.3e-6, builtin_material("gold-trench"),
                             builtin_material("gold-trench"), ok::gradient,
                             {235e-9, 280e-9, 330e-9, 420e-9});
    if (id == "afm-upgraded")
        return make_scenario(id, 43.47e-6, builtin_material("gold-trench"),
                             builtin_material("gold-trench"), ok::gradient,
                             {250e-9, 400e-9, 600e-9, 800e-9, 950e-9});
    if (id == "au-ni")
        return make_scenario(id, 64.1e-6, builtin_material("gold-trench"),
                             builtin_material("nickel"), ok::gradient,
                             {220e-9, 300e-9, 400e-9, 500e-9});
    if (id == "ni-ni")
        return make_scenario(id, 61.71e-6, builtin_material("nickel"),
                             builtin_material("nickel"), ok::gradient,
                             {250e-9, 300e-9, 350e-9, 420e-9});
    throw validation_error("unknown builtin scenario: " + id);
}

material_spec load_material(const std::string& path) {
    kv_file f = read_kv(path);
    material_spec m;
    std::optional<double> r_tr, r_l;
    std::string core_mode = "constant";
    std::string table_path;
    oscillator_set oscs;
    for (const auto& e : f.entries) {
        if (e.key == "name") {
            m.name = e.value;
        } else if (e.key == "hbar_omega_p_ev") {
            m.hbar_omega_p_ev = to_double(f, e);
        } else if (e.key == "hbar_gamma_ev") {
            m.hbar_gamma_ev = to_double(f, e);
        } else if (e.key == "mu_static") {
            m.mu_static = to_double(f, e);
        } else if (e.key == "v_tr_over_vf") {
            r_tr = to_double(f, e);
        } else if (e.key == "v_l_over_vf") {
            r_l = to_double(f, e);
        } else if (e.key == "core") {
            std::istringstream ss(e.value);
            ss >> core_mode;
            if (core_mode == "table_file") {
                std::string rest;
                std::getline(ss, rest);
                table_path = trim(rest);
                if (table_path.empty())
                    throw validation_error(path + ": field 'core': table_file needs a path");
            } else if (core_mode != "constant" && core_mode != "oscillators") {
                throw validation_error(path + ": field 'core': expected constant, oscillators, "
                                              "or table_file <path>");
            }
        } else if (e.key == "oscillator") {
            std::istringstream ss(e.value);
            oscillator o{};
            if (!(ss >> o.g_ev2 >> o.omega_ev >> o.gamma_ev))
                throw validation_error(path + ": field 'oscillator': expected 'g omega gamma'");
            oscs.entries.push_back(o);
        } else {
            throw validation_error(path + ": unknown field '" + e.key + "'");
        }
    }
    if (m.name.empty()) throw validation_error(path + ": field 'name' is required");
    if (!(m.hbar_omega_p_ev > 0.0))
        throw validation_error(path + ": field 'hbar_omega_p_ev' is required and must be > 0");
    if (core_mode == "oscillators" || (!oscs.entries.empty() && core_mode == "constant"))
        core_mode = "oscillators";
    if (core_mode == "oscillators") {
        if (oscs.entries.empty())
            throw validation_error(path + ": core = oscillators but no oscillator lines");
        m.core = std::move(oscs);
    } else if (core_mode == "table_file") {
        m.core = load_core_table(join_path(f.dir, table_path));
    }
    double vf = fermi_velocity(m.hbar_omega_p_ev);
    m.v_tr = r_tr.value_or(1.5) * vf;
    m.v_l = r_l.value_or(1.5) * vf;
    m.validate();
    return m;
}

std::vector<measured_point> load_points(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open data file: " + path);
    std::vector<measured_point> pts;
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream row(line);
        measured_point p;
        if (!(row >> p.a_m >> p.value >> p.err_minus >> p.err_plus)) {
            if (pts.empty() && n <= 2) continue;  // header
            throw validation_error(path + ":" + std::to_string(n) + ": bad data row");
        }
        if (!(row >> p.confidence)) p.confidence = 95;
        if (p.err_minus < 0.0 || p.err_plus < 0.0)
            throw validation_error(path + ":" + std::to_string(n) + ": negative error arm");
        pts.push_back(p);
    }
    if (pts.empty()) throw validation_error(path + ": no data points");
    return pts;
}

scenario load_scenario(const std::string& path) {
    kv_file f = read_kv(path);
    scenario s;
    auto material_from = [&](const kv_entry& e) {
        auto names = builtin_material_names();
        if (std::find(names.begin(), names.end(), e.value) != names.end())
            return builtin_material(e.value);
        return load_material(join_path(f.dir, e.value));
    };
    bool have_m1 = false, have_m2 = false;
    for (const auto& e : f.entries) {
        if (e.key == "id") {
            s.id = e.value;
        } else if (e.key == "geometry") {
            if (e.value == "plates")
                s.geometry = geometry_kind::plates;
            else if (e.value == "sphere-plate")
                s.geometry = geometry_kind::sphere_plate;
            else
                throw validation_error(path + ": field 'geometry': plates or sphere-plate");
        } else if (e.key == "radius_m") {
            s.sphere.radius_m = to_double(f, e);
        } else if (e.key == "material1") {
            s.material1 = material_from(e);
            have_m1 = true;
        } else if (e.key == "material2") {
            s.material2 = material_from(e);
            have_m2 = true;
        } else if (e.key == "models") {
            s.models = parse_models(e.value);
        } else if (e.key == "temperature_k") {
            s.temperature_k = to_double(f, e);
        } else if (e.key == "separations_m") {
            s.separations_m = parse_number_list(f, e);
        } else if (e.key == "observable") {
            if (e.value == "pressure")
                s.observable = observable_kind::pressure;
            else if (e.value == "force")
                s.observable = observable_kind::force;
            else if (e.value == "gradient")
                s.observable = observable_kind::gradient;
            else
                throw validation_error(path + ": field 'observable': pressure, force, or gradient");
        } else if (e.key == "delta_omega_p") {
            s.delta_omega_p = to_double(f, e);
        } else if (e.key == "delta_gamma") {
            s.delta_gamma = to_double(f, e);
        } else if (e.key == "theta") {
            s.sphere.theta_constant = to_double(f, e);
        } else if (e.key == "theta_table") {
            s.sphere.theta_table = load_value_table(join_path(f.dir, e.value));
        } else if (e.key == "correction_table") {
            s.sphere.correction_table = load_value_table(join_path(f.dir, e.value));
        } else if (e.key == "data_file") {
            s.data = load_points(join_path(f.dir, e.value));
        } else {
            throw validation_error(path + ": unknown field '" + e.key + "'");
        }
    }
    if (s.id.empty()) throw validation_error(path + ": field 'id' is required");
    if (!have_m1 || !have_m2)
        throw validation_error(path + ": fields 'material1' and 'material2' are required");
    s.validate();
    return s;
}

namespace {

material_spec scaled(const material_spec& m, double f_wp, double f_gamma) {
    material_spec out = m;
    out.hbar_omega_p_ev *= f_wp;
    out.hbar_gamma_ev *= f_gamma;
    return out;
}

double evaluate_observable(const scenario& s, response_kind model, double a, double f_wp,
                           double f_gamma, const lifshitz_spec& spec) {
    plate_pair pair;
    pair.first = {scaled(s.material1, f_wp, f_gamma), model};
    pair.second = {scaled(s.material2, f_wp, f_gamma), model};
    matsubara_context ctx{s.temperature_k, a};
    switch (s.observable) {
        case observable_kind::pressure:
            return pressure(pair, ctx, spec);
        case observable_kind::force:
            return pfa_force(free_energy(pair, ctx, spec), a, s.sphere);
        case observable_kind::gradient:
            return force_gradient(pressure(pair, ctx, spec), a, s.sphere);
    }
    throw validation_error("bad observable");
}

bool intervals_overlap(double lo1, double hi1, double lo2, double hi2) {
    return lo1 <= hi2 && lo2 <= hi1;
}

// log-log interpolation of one band edge between grid points; falls back to
// linear when signs differ or an edge vanishes
double interp_edge(double a0, double v0, double a1, double v1, double a) {
    if (v0 * v1 > 0.0) {
        double s = v0 > 0.0 ? 1.0 : -1.0;
        double t = (std::log(a) - std::log(a0)) / (std::log(a1) - std::log(a0));
        return s * std::exp(std::log(std::abs(v0)) +
                            t * (std::log(std::abs(v1)) - std::log(std::abs(v0))));
    }
    double t = (a - a0) / (a1 - a0);
    return v0 + t * (v1 - v0);
}

}  // namespace

std::vector<comparison_row> run_scenario(const scenario& s, const lifshitz_spec& spec) {
    s.validate();
    std::vector<std::array<double, 2>> corners;
    {
        std::vector<double> fw = {1.0}, fg = {1.0};
        if (s.delta_omega_p > 0.0) fw = {1.0 - s.delta_omega_p, 1.0 + s.delta_omega_p};
        if (s.delta_gamma > 0.0) fg = {1.0 - s.delta_gamma, 1.0 + s.delta_gamma};
        for (double w : fw)
            for (double g : fg) corners.push_back({w, g});
    }

    struct job {
        std::size_t row;
        double f_wp, f_gamma;
        bool central;
    };
    std::vector<comparison_row> rows;
    std::vector<job> jobs;
    for (response_kind model : s.models) {
        for (double a : s.separations_m) {
            std::size_t r = rows.size();
            comparison_row row;
            row.a_m = a;
            row.model = model;
            rows.push_back(row);
            jobs.push_back({r, 1.0, 1.0, true});
            for (const auto& c : corners) jobs.push_back({r, c[0], c[1], false});
        }
    }

    std::vector<double> values(jobs.size());
    parallel_for(jobs.size(), [&](std::size_t i) {
        const job& j = jobs[i];
        values[i] = evaluate_observable(s, rows[j.row].model, rows[j.row].a_m, j.f_wp,
                                        j.f_gamma, spec);
    });

    for (auto& r : rows) {
        r.low = std::numeric_limits<double>::infinity();
        r.high = -r.low;
    }
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        comparison_row& r = rows[jobs[i].row];
        if (jobs[i].central) r.central = values[i];
        r.low = std::min(r.low, values[i]);
        r.high = std::max(r.high, values[i]);
    }

    for (const auto& p : s.data) {
        for (auto& r : rows) {
            if (std::abs(r.a_m - p.a_m) <= 1e-6 * p.a_m) {
                r.has_measured = true;
                r.measured = p;
                r.pass = intervals_overlap(r.low, r.high, p.value - p.err_minus,
                                           p.value + p.err_plus);
            }
        }
    }

    std::stable_sort(rows.begin(), rows.end(),
                     [&](const comparison_row& x, const comparison_row& y) {
                         double rx = model_rank(s.models, x.model);
                         double ry = model_rank(s.models, y.model);
                         return rx != ry ? rx < ry : x.a_m < y.a_m;
                     });
    return rows;
}

compare_summary compare(std::vector<comparison_row>& rows,
                        const std::vector<measured_point>& points) {
    if (points.empty()) throw validation_error("compare: no measured points");
    compare_summary out;
    std::vector<response_kind> models;
    for (const auto& r : rows)
        if (std::find(models.begin(), models.end(), r.model) == models.end())
            models.push_back(r.model);

    for (response_kind model : models) {
        std::vector<const comparison_row*> grid;
        for (const auto& r : rows)
            if (r.model == model) grid.push_back(&r);
        std::sort(grid.begin(), grid.end(), [](const comparison_row* a, const comparison_row* b) {
            return a->a_m < b->a_m;
        });

        std::vector<measured_point> sorted(points.begin(), points.end());
        std::sort(sorted.begin(), sorted.end(),
                  [](const measured_point& a, const measured_point& b) { return a.a_m < b.a_m; });

        bool in_run = false;
        double run_lo = 0.0, run_hi = 0.0;
        for (const auto& p : sorted) {
            double lo, hi;
            auto exact = std::find_if(grid.begin(), grid.end(), [&](const comparison_row* r) {
                return std::abs(r->a_m - p.a_m) <= 1e-6 * p.a_m;
            });
            if (exact != grid.end()) {
                lo = (*exact)->low;
                hi = (*exact)->high;
            } else {
                auto upper = std::find_if(grid.begin(), grid.end(), [&](const comparison_row* r) {
                    return r->a_m > p.a_m;
                });
                if (upper == grid.begin() || upper == grid.end())
                    throw validation_error("compare: point at " + std::to_string(p.a_m) +
                                           " m outside the theory grid");
                const comparison_row* r0 = *(upper - 1);
                const comparison_row* r1 = *upper;
                double e0 = interp_edge(r0->a_m, r0->low, r1->a_m, r1->low, p.a_m);
                double e1 = interp_edge(r0->a_m, r0->high, r1->a_m, r1->high, p.a_m);
                lo = std::min(e0, e1);
                hi = std::max(e0, e1);
            }
            bool pass = intervals_overlap(lo, hi, p.value - p.err_minus, p.value + p.err_plus);
            ++out.total;
            if (pass) ++out.passed;
            if (exact != grid.end()) {
                for (auto& r : rows)
                    if (&r == *exact) {
                        r.has_measured = true;
                        r.measured = p;
                        r.pass = pass;
                    }
            }
            if (!pass) {
                if (!in_run) {
                    in_run = true;
                    run_lo = p.a_m;
                }
                run_hi = p.a_m;
            } else if (in_run) {
                out.excluded.push_back({model, run_lo, run_hi});
                in_run = false;
            }
        }
        if (in_run) out.excluded.push_back({model, run_lo, run_hi});
    }
    return out;
}

void export_csv(const std::vector<comparison_row>& rows, const std::string& path) {
    std::ofstream outf(path);
    if (!outf) throw validation_error("cannot open for writing: " + path);
    std::string text = "a_m,model,central,low,high,measured,err_minus,err_plus,pass\n";
    for (const auto& r : rows) {
        format_field(text, r.a_m);
        text += ',';
        text += model_name(r.model);
        text += ',';
        format_field(text, r.central);
        text += ',';
        format_field(text, r.low);
        text += ',';
        format_field(text, r.high);
        text += ',';
        if (r.has_measured) {
            format_field(text, r.measured.value);
            text += ',';
            format_field(text, r.measured.err_minus);
            text += ',';
            format_field(text, r.measured.err_plus);
            text += ',';
            text += r.pass ? '1' : '0';
        } else {
            text += ",,,";
        }
        text += '\n';
    }
    outf << text;
    if (!outf) throw validation_error("write failed: " + path);
}

void export_json(const std::vector<comparison_row>& rows, const std::string& path) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json obj;
        obj["a_m"] = r.a_m;
        obj["model"] = model_name(r.model);
        obj["central"] = r.central;
        obj["low"] = r.low;
        obj["high"] = r.high;
        if (r.has_measured) {
            obj["measured"] = r.measured.value;
            obj["err_minus"] = r.measured.err_minus;
            obj["err_plus"] = r.measured.err_plus;
            obj["pass"] = r.pass;
        }
        arr.push_back(obj);
    }
    std::ofstream outf(path);
    if (!outf) throw validation_error("cannot open for writing: " + path);
    outf << arr.dump(2) << '\n';
    if (!outf) throw validation_error("write failed: " + path);
}

sensitivity_result sweep_velocity(const material_spec& base, bool longitudinal, double a_m,
                                  double temperature_k, int n_points,
                                  const lifshitz_spec& spec) {
    if (n_points < 2) throw validation_error("sweep_velocity: need at least two points");
    double vf = fermi_velocity(base.hbar_omega_p_ev);
    double v_lo = longitudinal ? 0.0 : 0.5 * vf;
    double v_hi = longitudinal ? 10.0 * vf : 3.0 * vf;

    matsubara_context ctx{temperature_k, a_m};
    auto pressure_at = [&](double v) {
        material_spec m = base;
        (longitudinal ? m.v_l : m.v_tr) = v;
        plate_pair pair;
        pair.first = {m, response_kind::nonlocal};
        pair.second = {m, response_kind::nonlocal};
        return pressure(pair, ctx, spec);
    };

    sensitivity_result out;
    out.sweep.resize(static_cast<std::size_t>(n_points));
    std::vector<double> vs(static_cast<std::size_t>(n_points));
    for (int i = 0; i < n_points; ++i)
        vs[static_cast<std::size_t>(i)] = v_lo + (v_hi - v_lo) * i / (n_points - 1);
    parallel_for(vs.size(), [&](std::size_t i) { out.sweep[i] = {vs[i], pressure_at(vs[i])}; });

    double ref = pressure_at(longitudinal ? base.v_l : base.v_tr);
    double lo = out.sweep.front().second, hi = lo;
    for (const auto& [v, p] : out.sweep) {
        lo = std::min(lo, p);
        hi = std::max(hi, p);
    }
    out.max_rel_change = (hi - lo) / std::abs(ref);
    return out;
}

}  // namespace casimir
