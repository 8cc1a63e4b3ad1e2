#include "core/registry.hpp"

#include "core/fixtures.hpp"

namespace samc {

namespace {

const std::vector<std::string> kNames = {
    "strip.dX",      "strip.dX_twisted",      "disk.d",       "disk.d_twisted",
    "fixture.sigma", "fixture.annulus",       "fixture.annulus_plane",
    "euclid.square", "euclid.plane",          "euclid.strip", "test.broken_asym",
};

}  // namespace

std::vector<std::string> registry_names() { return kNames; }

bool registry_has(const std::string& name) {
    for (const std::string& n : kNames)
        if (n == name) return true;
    return false;
}

Metric<double> lookup_float(const std::string& name) {
    if (name == "strip.dX") return make_strip_dX<double>();
    if (name == "strip.dX_twisted") return make_strip_dX_twisted<double>();
    if (name == "disk.d") return make_disk_d<double>();
    if (name == "disk.d_twisted") return make_disk_d_twisted<double>();
    if (name == "fixture.sigma") return make_sigma_fixture();
    if (name == "fixture.annulus") return make_annulus_fixture();
    if (name == "fixture.annulus_plane") return make_annulus_plane_fixture();
    if (name == "euclid.square") return make_euclid_square();
    if (name == "euclid.plane") return make_euclid_plane();
    if (name == "euclid.strip") return make_euclid_strip();
    if (name == "test.broken_asym") return make_broken_asym();
    throw domain_error("unknown metric space: " + name);
}

Metric<Rational> lookup_exact(const std::string& name) {
    if (name == "strip.dX") return make_strip_dX<Rational>();
    if (name == "strip.dX_twisted") return make_strip_dX_twisted<Rational>();
    if (name == "disk.d") return make_disk_d<Rational>();
    if (name == "disk.d_twisted") return make_disk_d_twisted<Rational>();
    if (!registry_has(name)) throw domain_error("unknown metric space: " + name);
    throw domain_error("metric space is not exact-capable: " + name);
}

bool lookup_exact_capable(const std::string& name) {
    return name == "strip.dX" || name == "strip.dX_twisted" || name == "disk.d" ||
           name == "disk.d_twisted";
}

}  // namespace samc
