#include "zerokit/solver.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>

#include "zerokit/airy_zeros.hpp"
#include "zerokit/bessel_zeros.hpp"
#include "zerokit/specfun.hpp"
#include "zerokit/verify.hpp"

namespace zk {

namespace {

const cplx I(0.0, 1.0);

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// atan(N/D) on the principal branch, finite when D = 0.
cplx atan_ratio(cplx N, cplx D) {
    cplx num = D + I * N, den = D - I * N;
    if (den == cplx(0.0) || num == cplx(0.0))
        throw SingularPointError("arctan argument at a logarithmic singularity");
    return std::log(num / den) / (2.0 * I);
}

Eval eval_at(const SolutionSpec& spec, cplx z, int side) {
    if (spec.family == Family::Bessel && side != 0) return eval_side(spec, z, side);
    return eval_solution(spec, principal(z));
}

double same_zero_tol(const SweepConfig& cfg, cplx z) {
    return std::max(10 * cfg.tol, 1e-10) * std::max(1.0, std::abs(z));
}

}  // namespace

cplx fp4_step(cplx z, cplx y, cplx dy, cplx A) {
    if (A == cplx(0.0)) throw TurningPointError("fp4_step: A(z) = 0");
    cplx s = std::sqrt(A);
    return z - atan_ratio(s * y, dy) / s;
}

cplx fp2_deriv_step(cplx z, cplx y, cplx dy, cplx A) {
    if (A == cplx(0.0)) throw TurningPointError("fp2_deriv_step: A(z) = 0");
    cplx s = std::sqrt(A);
    return z + atan_ratio(dy, s * y) / s;
}

cplx airy_deriv_fp4(const SolutionSpec& spec, cplx z) {
    if (z == cplx(0.0)) throw SingularPointError("airy_deriv_fp4: z = 0");
    cplx w2 = -z - 3.0 / (4.0 * z * z);
    if (w2 == cplx(0.0)) throw SingularPointError("airy_deriv_fp4: w(z) = 0");
    cplx w = std::sqrt(w2);
    Eval e = eval_solution(spec, z);
    cplx den = z * e.f - e.df / (2.0 * z);
    return z - atan_ratio(w * e.df, den) / w;
}

cplx airy_deriv_fp4(cplx z, cplx alpha) {
    SolutionSpec s;
    s.family = Family::Airy;
    s.alpha = alpha;
    s.deriv = true;
    return airy_deriv_fp4(s, z);
}

cplx bessel_deriv_fp4(const SolutionSpec& spec0, cplx z, int side) {
    SolutionSpec spec = reflect_order(spec0);
    const double nu = spec.nu, n2 = nu * nu;
    cplx z2 = z * z;
    if (z == cplx(0.0) || z2 == cplx(n2)) throw SingularPointError("bessel_deriv_fp4: z in {0, +-nu}");
    const double P = -3 * (n2 + 0.25), Q = n2 * (3 * n2 - 2.5), R = -n2 * n2 * (n2 - 0.25);
    cplx W2 = ((z2 + P) * z2 + Q) * z2 + R;
    if (W2 == cplx(0.0)) throw SingularPointError("bessel_deriv_fp4: W(z) = 0");
    cplx W = std::sqrt(W2);
    Eval e = eval_at(spec, z, side);
    cplx c = e.f, c1 = (nu / z) * e.f - e.df;
    cplx M = -z2 * z2 + 2 * nu * (nu - 0.25) * z2 - n2 * nu * (nu + 0.5);
    cplx N = 0.5 * (z2 * z + n2 * z);
    cplx num = nu * c - z * c1;
    cplx den = M * c + N * c1;
    return z - z * (z2 - n2) / W * atan_ratio(W * num, den);
}

cplx bessel_deriv_fp4(double nu, cplx alpha, cplx z) {
    SolutionSpec s;
    s.family = Family::Bessel;
    s.nu = nu;
    s.alpha = alpha;
    s.deriv = true;
    return bessel_deriv_fp4(s, z);
}

cplx asl_step(cplx z, cplx A, int sign) {
    if (A == cplx(0.0)) throw TurningPointError("asl_step: A(z) = 0");
    return z + static_cast<double>(sign) * kPi / std::sqrt(A);
}

cplx normal_coefficient(const SolutionSpec& spec, cplx z) {
    if (spec.family == Family::Airy) {
        if (!spec.deriv) return -z;
        return -z - 3.0 / (4.0 * z * z);
    }
    const double n2 = spec.nu * spec.nu;
    cplx z2 = z * z;
    if (!spec.deriv) return 1.0 - (n2 - 0.25) / z2;
    const double P = -3 * (n2 + 0.25), Q = n2 * (3 * n2 - 2.5), R = -n2 * n2 * (n2 - 0.25);
    cplx W2 = ((z2 + P) * z2 + Q) * z2 + R;
    cplx d = z * (z2 - n2);
    return W2 / (d * d);
}

cplx fixed_point_map(const SolutionSpec& spec, cplx z, int side) {
    if (spec.family == Family::Airy) {
        if (spec.deriv) return airy_deriv_fp4(spec, z);
        Eval e = eval_solution(spec, z);
        return fp4_step(z, e.f, e.df, -z);
    }
    if (spec.deriv) return bessel_deriv_fp4(spec, z, side);
    if (z == cplx(0.0)) throw SingularPointError("fixed_point_map: z = 0");
    Eval e = eval_at(spec, z, side);
    // normal form y = sqrt(z) C, ratio y/y' = 2zC/(C + 2zC')
    return fp4_step(z, 2.0 * z * e.f, e.f + 2.0 * z * e.df, normal_coefficient(spec, z));
}

FixedPointResult refine(const SolutionSpec& spec0, cplx z0, const SweepConfig& cfg, int side) {
    SolutionSpec spec = reflect_order(spec0);
    FixedPointResult r;
    r.z = z0;
    cplx z = z0;
    bool failed = false;
    for (int it = 1; it <= cfg.max_iter; ++it) {
        cplx zn;
        try {
            zn = fixed_point_map(spec, z, side);
        } catch (const std::exception&) {
            failed = true;
            break;
        }
        r.iterations = it;
        if (!finite(zn)) {
            failed = true;
            break;
        }
        double dz = std::abs(zn - z);
        z = zn;
        if (dz <= 1e-14 * std::max(1.0, std::abs(z))) break;
    }
    if (std::abs(z.imag()) < 1e-14 * std::abs(z)) z = cplx(z.real(), 0.0);
    r.z = z;
    if (failed) {
        r.residual = HUGE_VAL;
        return r;
    }
    try {
        auto info = zero_residual(spec, z, side);
        r.residual = info.residual;
        r.converged = info.residual < cfg.tol &&
                      info.newton_step <= 10 * cfg.tol * std::max(1.0, std::abs(z));
    } catch (const std::exception&) {
        r.residual = HUGE_VAL;
    }
    return r;
}

namespace {

// A refined point is reported only if the principal function vanishes there.
bool principal_zero(const SolutionSpec& spec, cplx z, const SweepConfig& cfg, double* residual) {
    try {
        auto info = zero_residual(spec, z, 0);
        if (residual) *residual = info.residual;
        return info.residual < cfg.tol &&
               info.newton_step <= 10 * cfg.tol * std::max(1.0, std::abs(z));
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace

SweepResult sweep_string(const SolutionSpec& spec0, cplx seed, cplx direction,
                         const StopRule& stop, const SweepConfig& cfg, int side,
                         const std::string& label) {
    SolutionSpec spec = reflect_order(spec0);
    SweepResult out;
    const cplx dir = direction / std::abs(direction);
    auto proj = [&](cplx z) { return (z * std::conj(dir)).real(); };
    const Rectangle& rg = cfg.region;
    double pmax = -HUGE_VAL;
    for (cplx c : {rg.lo, rg.hi, cplx(rg.lo.real(), rg.hi.imag()), cplx(rg.hi.real(), rg.lo.imag())})
        pmax = std::max(pmax, proj(c));

    std::vector<cplx> visited;
    auto record = [&](cplx z) -> bool {
        visited.push_back(z);
        double res = 0.0;
        if (!principal_zero(spec, z, cfg, &res)) return false;
        if (in_count_region(spec, rg, z)) out.zeros.push_back({principal(z), res, label, 0});
        return true;
    };
    auto seen = [&](cplx z) {
        for (cplx v : visited)
            if (std::abs(v - z) <= same_zero_tol(cfg, z)) return true;
        return false;
    };

    auto first = refine(spec, seed, cfg, side);
    if (!first.converged) {
        out.stop_reason = "seed did not converge";
        out.diagnostics.push_back(label + ": seed " + std::to_string(seed.real()) + "," +
                                  std::to_string(seed.imag()) + " did not converge");
        return out;
    }
    cplx z = first.z;
    if (!record(z)) {
        out.stop_reason = "left the principal sheet";
        return out;
    }
    for (int n = 0; n < 4000; ++n) {
        if (proj(z) > pmax + 1.0) {
            out.stop_reason = "left the region";
            return out;
        }
        cplx A = normal_coefficient(spec, z);
        if (A == cplx(0.0) || !finite(A)) {
            out.stop_reason = "turning point";
            return out;
        }
        cplx step = kPi / std::sqrt(A);
        if (proj(z + step) < proj(z)) step = -step;
        bool ok = false;
        FixedPointResult fr;
        for (double scale : {1.0, 1.5}) {
            cplx zhat = z + scale * step;
            fr = refine(spec, zhat, cfg, side);
            ok = fr.converged && !seen(fr.z) && proj(fr.z) > proj(z) &&
                 std::abs(fr.z - zhat) < 0.6 * std::abs(step) * scale;
            if (ok) break;
        }
        if (!ok) {
            out.stop_reason = "no further zero along the string";
            return out;
        }
        z = fr.z;
        if (stop && stop(z)) {
            out.stop_reason = "stop rule";
            return out;
        }
        if (!record(z)) {
            out.stop_reason = "left the principal sheet";
            return out;
        }
    }
    out.stop_reason = "step limit";
    return out;
}

namespace {

struct Job {
    std::string label;
    cplx seed;
    cplx direction;
    StopRule stop;
    int side = 0;
};

struct Candidate {
    std::string label;
    cplx z;
    int side = 0;
};

double max_modulus(const Rectangle& r) {
    double m = 0.0;
    for (cplx c : {r.lo, r.hi, cplx(r.lo.real(), r.hi.imag()), cplx(r.hi.real(), r.lo.imag())})
        m = std::max(m, std::abs(c));
    return m;
}

void airy_plan(const SolutionSpec& spec, const SweepConfig& cfg, std::vector<Job>& jobs,
               std::vector<Candidate>& cands, std::vector<std::string>& diags) {
    auto pat = classify_airy(spec);
    const double R = max_modulus(cfg.region) + 2.0;
    for (AiryString s : {AiryString::NegAxis, AiryString::RayPlus, AiryString::RayMinus}) {
        if (std::find(pat.absent_rays.begin(), pat.absent_rays.end(), s) != pat.absent_rays.end())
            continue;
        std::vector<ZeroEstimate> ests;
        for (int k0 = 1; k0 < 4000; k0 += 50) {
            std::string note;
            auto chunk = airy_estimates(spec, s, k0, k0 + 49, &note);
            bool beyond = false;
            for (auto& e : chunk) {
                if (std::abs(e.z) > R) {
                    beyond = true;
                    break;
                }
                ests.push_back(e);
            }
            if (beyond) break;
            if (chunk.empty() && k0 > 1) break;
        }
        if (ests.empty()) continue;
        const std::string label = to_string(s);
        for (auto& e : ests) cands.push_back({label, e.z, 0});
        // inward sweep; a zero behind the origin belongs to another string
        cplx u = ests.back().z / std::abs(ests.back().z);
        jobs.push_back({label, ests.back().z, -u,
                        [u](cplx z) { return (z * std::conj(u)).real() < 0.0; }, 0});
    }
    if (!pat.absent_rays.empty())
        diags.push_back("strings absent: " + std::to_string(pat.absent_rays.size()));
}

std::vector<ZeroEstimate> cut_estimates(const SolutionSpec& spec, int m, int k_lo, int k_hi) {
    if (spec.limit == Limit::MinusInf) {
        if (m > 0) return {};
        return hankel_belowcut(spec.nu, k_lo, k_hi, spec.deriv);
    }
    if (spec.limit == Limit::PlusInf) {
        if (m < 0) return {};
        auto v = hankel_belowcut(spec.nu, k_lo, k_hi, spec.deriv);
        for (auto& e : v) {
            e.z = std::conj(e.z);
            if (e.string == "cut_below") e.string = "cut_above";
        }
        return v;
    }
    auto cls = classify_bessel(spec);
    if (cls.cut_axis && spec.alpha.imag() == 0.0 &&
        std::abs(std::remainder(spec.alpha.real(), kPi)) < 1e-15) {
        if (m < 0) return {};
        auto v = pos_axis_estimates(spec, k_lo, k_hi);
        for (auto& e : v) {
            e.z = cplx(-e.z.real(), 0.0);
            e.string = "cut_axis";
        }
        return v;
    }
    auto v = branchcut_estimates(spec.nu, spec.alpha, m, k_lo, k_hi, spec.deriv);
    if (m < 0 && !v.empty() && v.front().string == "cut_axis") return {};
    return v;
}

void bessel_plan(const SolutionSpec& spec, const SweepConfig& cfg, std::vector<Job>& jobs,
                 std::vector<Candidate>& cands, std::vector<std::string>& diags) {
    const double nu = spec.nu;
    const double x0 = cfg.region.lo.real(), x1 = cfg.region.hi.real();
    auto cls = classify_bessel(spec);
    for (auto& n : cls.notes) diags.push_back(n);

    if (cls.pos_axis && x1 > nu) {
        cplx seed;
        bool have = false;
        for (int k0 = 1; k0 < 100000 && !have; k0 += 50) {
            auto ests = pos_axis_estimates(spec, k0, k0 + 49);
            for (auto& e : ests) {
                if (e.z.real() <= x1 + 1.0) cands.push_back({"pos_axis", e.z, 0});
                if (e.z.real() > x1) {
                    seed = e.z;
                    have = true;
                    break;
                }
            }
        }
        if (cfg.L) seed = cplx(*cfg.L, -spec.alpha.imag());
        if (have || cfg.L)
            jobs.push_back({"pos_axis", seed, cplx(-1.0), [nu](cplx z) { return z.real() < nu; }, 0});
    }

    for (int m : {1, -1}) {
        if (x0 >= 0.0) break;
        std::vector<ZeroEstimate> found;
        cplx seed;
        bool have = false;
        for (int k0 = 1; k0 < 100000 && !have; k0 += 50) {
            auto ests = cut_estimates(spec, m, k0, k0 + 49);
            if (ests.empty()) break;
            for (auto& e : ests) {
                int side = e.string == "cut_below" ? -1 : 1;
                if (e.z.real() >= x0 - 1.0) cands.push_back({e.string, e.z, side});
                if (e.z.real() < x0) {
                    found.push_back(e);
                    seed = e.z;
                    have = true;
                    break;
                }
            }
        }
        if (!have) continue;
        std::string label = found.back().string;
        int side = label == "cut_below" ? -1 : 1;
        if (cfg.L && spec.limit == Limit::None) {
            auto bc = branchcut_analysis(nu, spec.alpha);
            seed = label == "cut_axis" ? cplx(-*cfg.L, 0.0)
                                       : cplx(-*cfg.L, m > 0 ? -bc.a : -bc.b);
        }
        jobs.push_back({label, seed, cplx(1.0), [nu](cplx z) { return z.real() > -nu; }, side});
    }

    if (nu > 0.5) {
        auto eye = eye_axis_cuts(spec);
        if (eye.airy_type_upper != EyeSide::None && eye.y_plus) {
            cplx seed(0.0, nu * *eye.y_plus);
            auto stop = [nu](cplx z) { return std::abs(z.real()) > nu || z.imag() <= 1e-3 * nu; };
            cands.push_back({"airy_upper", seed, 1});
            jobs.push_back({"airy_upper", seed, cplx(1.0), stop, 1});
            jobs.push_back({"airy_upper", seed, cplx(-1.0), stop, 1});
        }
        if (eye.airy_type_lower != EyeSide::None && eye.y_minus) {
            cplx seed(0.0, -nu * *eye.y_minus);
            auto stop = [nu](cplx z) { return std::abs(z.real()) > nu || z.imag() >= -1e-3 * nu; };
            cands.push_back({"airy_lower", seed, -1});
            jobs.push_back({"airy_lower", seed, cplx(1.0), stop, -1});
            jobs.push_back({"airy_lower", seed, cplx(-1.0), stop, -1});
        }
    }
}

template <class T, class F>
std::vector<T> run_all(size_t n, int threads, F work) {
    std::vector<T> out(n);
    if (threads <= 1) {
        for (size_t i = 0; i < n; ++i) out[i] = work(i);
        return out;
    }
    for (size_t b = 0; b < n; b += threads) {
        std::vector<std::future<T>> fs;
        for (size_t i = b; i < std::min(n, b + threads); ++i)
            fs.push_back(std::async(std::launch::async, work, i));
        for (size_t i = 0; i < fs.size(); ++i) out[b + i] = fs[i].get();
    }
    return out;
}

}  // namespace

ZeroReport compute_all_zeros(const SolutionSpec& spec0, const SweepConfig& cfg) {
    SolutionSpec spec = reflect_order(spec0);
    ZeroReport report;
    const Rectangle& rg = cfg.region;
    if (!(rg.lo.real() < rg.hi.real() && rg.lo.imag() < rg.hi.imag()))
        throw DomainError("degenerate region");

    std::vector<Job> jobs;
    std::vector<Candidate> cands;
    if (spec.family == Family::Airy)
        airy_plan(spec, cfg, jobs, cands, report.diagnostics);
    else
        bessel_plan(spec, cfg, jobs, cands, report.diagnostics);

    std::vector<Zero> zeros;
    auto known = [&](cplx z) {
        for (auto& q : zeros)
            if (std::abs(q.z - z) <= same_zero_tol(cfg, z)) return true;
        return false;
    };
    std::map<std::string, StringReport> strings;

    auto results = run_all<SweepResult>(jobs.size(), cfg.threads, [&](size_t i) {
        return sweep_string(spec, jobs[i].seed, jobs[i].direction, jobs[i].stop, cfg, jobs[i].side,
                            jobs[i].label);
    });
    for (size_t i = 0; i < jobs.size(); ++i) {
        auto& sr = strings[jobs[i].label];
        sr.label = jobs[i].label;
        sr.seeds.push_back(jobs[i].seed);
        sr.stop_reasons.push_back(results[i].stop_reason);
        for (auto& d : results[i].diagnostics) sr.diagnostics.push_back(d);
        for (auto& z : results[i].zeros)
            if (!known(z.z)) zeros.push_back(z);
    }

    // every estimate, refined on its own
    auto try_point = [&](cplx seed, int side) -> std::optional<Zero> {
        auto fr = refine(spec, seed, cfg, side);
        if (!fr.converged) return std::nullopt;
        cplx z = principal(fr.z);
        double res = 0.0;
        if (!in_count_region(spec, rg, z) || !principal_zero(spec, z, cfg, &res)) return std::nullopt;
        return Zero{z, res, "", 0};
    };
    auto refined = run_all<std::optional<Zero>>(cands.size(), cfg.threads, [&](size_t i) {
        return try_point(cands[i].z, cands[i].side);
    });
    for (size_t i = 0; i < cands.size(); ++i) {
        if (!refined[i] || known(refined[i]->z)) continue;
        refined[i]->string = cands[i].label;
        zeros.push_back(*refined[i]);
        strings[cands[i].label].label = cands[i].label;
    }

    // grid of seeds over the region
    if (cfg.grid_spacing > 0) {
        std::vector<Candidate> grid;
        const double x0 = rg.lo.real(), x1 = rg.hi.real(), y0 = rg.lo.imag(), y1 = rg.hi.imag();
        int nx = std::max(1, static_cast<int>(std::ceil((x1 - x0) / cfg.grid_spacing)));
        int ny = std::max(1, static_cast<int>(std::ceil((y1 - y0) / cfg.grid_spacing)));
        for (int i = 0; i <= nx; ++i) {
            for (int j = 0; j <= ny; ++j) {
                cplx p(x0 + (x1 - x0) * i / nx, y0 + (y1 - y0) * j / ny);
                if (std::abs(p) < 10 * rg.margin) continue;
                int side = 0;
                if (spec.family == Family::Bessel && p.real() < 0) side = p.imag() >= 0 ? 1 : -1;
                grid.push_back({"extra", p, side});
            }
        }
        auto gres = run_all<std::optional<Zero>>(grid.size(), cfg.threads, [&](size_t i) {
            return try_point(grid[i].z, grid[i].side);
        });
        int extra = 0;
        for (auto& g : gres) {
            if (!g || known(g->z)) continue;
            g->string = "extra";
            zeros.push_back(*g);
            ++extra;
        }
        if (extra > 0) {
            strings["extra"].label = "extra";
            report.diagnostics.push_back(std::to_string(extra) + " zero(s) found only by the seed grid");
        }
    }

    // k by ascending |z| within a label; output by label, Re, Im
    std::stable_sort(zeros.begin(), zeros.end(), [](const Zero& a, const Zero& b) {
        if (a.string != b.string) return a.string < b.string;
        return std::abs(a.z) < std::abs(b.z);
    });
    for (size_t i = 0; i < zeros.size(); ++i)
        zeros[i].k = (i > 0 && zeros[i - 1].string == zeros[i].string) ? zeros[i - 1].k + 1 : 1;
    std::stable_sort(zeros.begin(), zeros.end(), [](const Zero& a, const Zero& b) {
        if (a.string != b.string) return a.string < b.string;
        if (a.z.real() != b.z.real()) return a.z.real() < b.z.real();
        return a.z.imag() < b.z.imag();
    });
    for (auto& z : zeros) strings[z.string].found++;
    for (auto& [label, sr] : strings) report.strings.push_back(sr);
    report.zeros = std::move(zeros);
    return report;
}

}  // namespace zk
