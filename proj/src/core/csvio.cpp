#include "core/csvio.hpp"

#include <fstream>
#include <sstream>

namespace samc {

std::string axiom_report_csv(const AxiomReport& rep) {
    std::string out = "axiom,p,q,r,lhs,rhs\n";
    for (const Violation& v : rep.violations)
        out += v.axiom + "," + v.p + "," + v.q + "," + v.r + "," + v.lhs + "," + v.rhs + "\n";
    return out;
}

std::string convergence_report_csv(const ConvergenceReport& rep) {
    std::string out = "t,a,value,target,diff\n";
    for (const ConvergenceRow& r : rep.rows)
        out += r.t + "," + r.a + "," + r.value + "," + r.target + "," + r.diff + "\n";
    return out;
}

std::string winding_csv(const std::vector<WindingRow>& rows) {
    std::string out = "x1,half_turns_analytic,half_turns_accumulated\n";
    for (const WindingRow& r : rows)
        out += format_scalar(r.x1) + "," + format_scalar(r.half_turns_analytic) + "," +
               format_scalar(r.half_turns_accumulated) + "\n";
    return out;
}

std::string gauge_csv(const Gauge& g) {
    std::string out = "t,r\n";
    for (const Gauge::Breakpoint& b : g.steps)
        out += format_scalar(b.t) + "," + format_scalar(b.r) + "\n";
    return out;
}

std::string badness_csv(const std::vector<BadnessReport>& reports) {
    std::string out = "x1,x2,bad,r_bad,witness_a,witness_b,limit,ratio_sup,pairs\n";
    for (const BadnessReport& r : reports)
        out += format_scalar(r.point.x1) + "," + format_scalar(r.point.x2) + "," +
               (r.verdict_bad ? "1" : "0") + "," + (r.verdict_r_bad ? "1" : "0") + "," +
               r.witness_a + "," + r.witness_b + "," + format_scalar(r.limit) + "," +
               format_scalar(r.ratio_sup) + "," + std::to_string(r.pairs_scanned) + "\n";
    return out;
}

std::string extension_report_csv(const ExtensionReport& rep) {
    std::string out = "alpha,beta,t,estimate\n";
    for (const ExtensionRow& r : rep.rows)
        out += format_scalar(r.alpha) + "," + format_scalar(r.beta) + "," + format_scalar(r.t) +
               "," + format_scalar(r.estimate) + "\n";
    out += "# verdict," + std::string(to_string(rep.verdict)) + "\n";
    for (size_t i = 0; i < rep.residuals.size(); ++i)
        out += "# residual," + format_scalar(rep.params[i]) + "," +
               format_scalar(rep.residuals[i]) + "\n";
    return out;
}

std::string boundary_matrix_csv(const std::vector<double>& params,
                                const std::vector<std::vector<double>>& matrix) {
    std::string out = "alpha";
    for (double p : params) out += "," + format_scalar(p);
    out += "\n";
    for (size_t i = 0; i < matrix.size(); ++i) {
        out += format_scalar(params[i]);
        for (double v : matrix[i]) out += "," + format_scalar(v);
        out += "\n";
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << content;
    if (!f) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace samc
