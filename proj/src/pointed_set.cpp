#include <protex/finite/pointed_set.hpp>

#include <algorithm>
#include <numeric>

#include <protex/errors.hpp>

namespace protex {

PointedMap::PointedMap(int dom, int cod, std::vector<int> images): dom_(dom), cod_(cod), images_(std::move(images)) {
    if (dom_ < 0 || cod_ < 0) throw invariant_violation("pointed set sizes must be nonnegative");
    if (images_.size() != std::size_t(dom_) + 1) {
        throw invariant_violation("pointed map needs " + std::to_string(dom_ + 1) + " images, got " + std::to_string(images_.size()));
    }
    if (images_[0] != 0) throw invariant_violation("pointed map must send the basepoint to the basepoint");
    for (std::size_t x = 0; x < images_.size(); ++x) {
        if (images_[x] < 0 || images_[x] > cod_) throw invariant_violation("image of element " + std::to_string(x) + " is outside the codomain");
    }
}

bool is_injective(const PointedMap& f) {
    std::vector<bool> hit(std::size_t(f.cod()) + 1);
    for (int y: f.images()) {
        if (hit[std::size_t(y)]) return false;
        hit[std::size_t(y)] = true;
    }
    return true;
}

bool is_surjective(const PointedMap& f) {
    std::vector<bool> hit(std::size_t(f.cod()) + 1);
    for (int y: f.images()) hit[std::size_t(y)] = true;
    for (bool h: hit) if (!h) return false;
    return true;
}

bool is_strict_epi_closed_form(const PointedMap& f) {
    if (!is_surjective(f)) return false;
    std::vector<bool> hit(std::size_t(f.cod()) + 1);
    for (int x = 1; x <= f.dom(); ++x) {
        int y = f(x);
        if (y == 0) continue;
        if (hit[std::size_t(y)]) return false;
        hit[std::size_t(y)] = true;
    }
    return true;
}

FinPointedSets::FinPointedSets(int max_elements, std::size_t hom_budget): max_(max_elements), budget_(hom_budget) {
    if (max_ < 0) throw invariant_violation("max_elements must be nonnegative");
}

PointedMap FinPointedSets::identity(const PointedSet& x) const {
    std::vector<int> im(std::size_t(x.size) + 1);
    std::iota(im.begin(), im.end(), 0);
    return {x.size, x.size, std::move(im)};
}

PointedMap FinPointedSets::zero_map(const PointedSet& x, const PointedSet& y) const {
    return {x.size, y.size, std::vector<int>(std::size_t(x.size) + 1, 0)};
}

PointedMap FinPointedSets::compose(const PointedMap& g, const PointedMap& f) const {
    if (f.cod() != g.dom()) throw not_composable("pointed maps are not composable");
    std::vector<int> im;
    for (int y: f.images()) im.push_back(g(y));
    return {f.dom(), g.cod(), std::move(im)};
}

Universal<PointedSet, PointedMap> FinPointedSets::kernel(const PointedMap& f) const {
    std::vector<int> incl;
    for (int x = 0; x <= f.dom(); ++x) {
        if (f(x) == 0) incl.push_back(x);
    }
    int n = int(incl.size()) - 1;
    return {{n}, PointedMap(n, f.dom(), std::move(incl))};
}

Universal<PointedSet, PointedMap> FinPointedSets::cokernel(const PointedMap& f) const {
    std::vector<bool> in_image(std::size_t(f.cod()) + 1);
    for (int y: f.images()) in_image[std::size_t(y)] = true;
    std::vector<int> proj(std::size_t(f.cod()) + 1, 0);
    int n = 0;
    for (int y = 1; y <= f.cod(); ++y) {
        if (!in_image[std::size_t(y)]) proj[std::size_t(y)] = ++n;
    }
    return {{n}, PointedMap(f.cod(), n, std::move(proj))};
}

bool FinPointedSets::is_iso(const PointedMap& f) const {
    return f.dom() == f.cod() && is_injective(f);
}

Square<PointedSet, PointedMap> FinPointedSets::pullback(const PointedMap& f, const PointedMap& g) const {
    if (f.cod() != g.cod()) throw not_composable("pullback: maps have different codomains");
    std::vector<int> first, second;
    for (int x = 0; x <= f.dom(); ++x) {
        for (int y = 0; y <= g.dom(); ++y) {
            if (f(x) == g(y)) {
                first.push_back(x);
                second.push_back(y);
            }
        }
    }
    int n = int(first.size()) - 1;
    return {{n}, PointedMap(n, f.dom(), std::move(first)), PointedMap(n, g.dom(), std::move(second))};
}

Square<PointedSet, PointedMap> FinPointedSets::pushout(const PointedMap& i, const PointedMap& g) const {
    if (i.dom() != g.dom()) throw not_composable("pushout: maps have different domains");
    const int m = i.cod() + 1;
    std::vector<int> parent(std::size_t(m + g.cod() + 1));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[std::size_t(a)] != a) a = parent[std::size_t(a)] = parent[std::size_t(parent[std::size_t(a)])];
        return a;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::size_t(std::max(a, b))] = std::min(a, b);
    };
    unite(0, m);
    for (int k = 0; k <= i.dom(); ++k) unite(i(k), m + g(k));
    std::vector<int> number(parent.size(), -1);
    number[std::size_t(find(0))] = 0;
    int n = 0;
    std::vector<int> cls(parent.size());
    for (std::size_t a = 0; a < parent.size(); ++a) {
        int r = find(int(a));
        if (number[std::size_t(r)] < 0) number[std::size_t(r)] = ++n;
        cls[a] = number[std::size_t(r)];
    }
    std::vector<int> first(cls.begin(), cls.begin() + m), second(cls.begin() + m, cls.end());
    return {{n}, PointedMap(i.cod(), n, std::move(first)), PointedMap(g.cod(), n, std::move(second))};
}

std::optional<PointedMap> FinPointedSets::lift_through_mono(const PointedMap& m, const PointedMap& f) const {
    if (m.cod() != f.cod()) throw not_composable("lift_through_mono: maps have different codomains");
    std::vector<int> u;
    for (int x = 0; x <= f.dom(); ++x) {
        int found = -1;
        for (int a = 0; a <= m.dom() && found < 0; ++a) {
            if (m(a) == f(x)) found = a;
        }
        if (found < 0) return std::nullopt;
        u.push_back(found);
    }
    return PointedMap(f.dom(), m.dom(), std::move(u));
}

std::optional<PointedMap> FinPointedSets::descend_through_epi(const PointedMap& e, const PointedMap& f) const {
    if (e.dom() != f.dom()) throw not_composable("descend_through_epi: maps have different domains");
    std::vector<int> u(std::size_t(e.cod()) + 1, -1);
    for (int x = 0; x <= e.dom(); ++x) {
        auto& slot = u[std::size_t(e(x))];
        if (slot >= 0 && slot != f(x)) return std::nullopt;
        slot = f(x);
    }
    for (auto& s: u) if (s < 0) s = 0;
    return PointedMap(e.cod(), f.cod(), std::move(u));
}

std::optional<PointedMap> FinPointedSets::pullback_mediator(const Square<PointedSet, PointedMap>& sq, const PointedMap& a, const PointedMap& b) const {
    if (a.dom() != b.dom()) throw not_composable("pullback_mediator: legs have different domains");
    std::vector<int> u;
    for (int t = 0; t <= a.dom(); ++t) {
        int found = -1;
        for (int p = 0; p <= sq.object.size && found < 0; ++p) {
            if (sq.first(p) == a(t) && sq.second(p) == b(t)) found = p;
        }
        if (found < 0) return std::nullopt;
        u.push_back(found);
    }
    return PointedMap(a.dom(), sq.object.size, std::move(u));
}

std::optional<PointedMap> FinPointedSets::pushout_mediator(const Square<PointedSet, PointedMap>& sq, const PointedMap& a, const PointedMap& b) const {
    if (a.cod() != b.cod()) throw not_composable("pushout_mediator: legs have different codomains");
    std::vector<int> u(std::size_t(sq.object.size) + 1, -1);
    auto put = [&](int p, int v) {
        auto& s = u[std::size_t(p)];
        if (s >= 0 && s != v) return false;
        s = v;
        return true;
    };
    for (int x = 0; x <= a.dom(); ++x) if (!put(sq.first(x), a(x))) return std::nullopt;
    for (int y = 0; y <= b.dom(); ++y) if (!put(sq.second(y), b(y))) return std::nullopt;
    for (auto& s: u) if (s < 0) s = 0;
    return PointedMap(sq.object.size, a.cod(), std::move(u));
}

std::vector<PointedSet> FinPointedSets::objects() const {
    std::vector<PointedSet> out;
    for (int n = 0; n <= max_; ++n) out.push_back({n});
    return out;
}

std::vector<PointedMap> FinPointedSets::morphisms(const PointedSet& x, const PointedSet& y) const {
    double count = 1;
    for (int i = 0; i < x.size; ++i) count *= double(y.size + 1);
    if (count > double(budget_)) {
        throw budget_exceeded("hom-set of " + std::to_string(x.size) + " -> " + std::to_string(y.size) + " has more than " + std::to_string(budget_) + " maps");
    }
    std::vector<PointedMap> out;
    std::vector<int> im(std::size_t(x.size) + 1, 0);
    for (;;) {
        out.emplace_back(x.size, y.size, im);
        int k = x.size;
        while (k >= 1 && im[std::size_t(k)] == y.size) im[std::size_t(k--)] = 0;
        if (k < 1) break;
        ++im[std::size_t(k)];
    }
    return out;
}

std::string FinPointedSets::label() const {
    return "FinPointedSet(max_elements=" + std::to_string(max_) + ")";
}

json FinPointedSets::bounds_json() const {
    return {{"instance", "pointed_sets"}, {"max_elements", max_}, {"hom_budget", budget_}};
}

json FinPointedSets::object_json(const PointedSet& x) const { return {{"size", x.size}}; }

json FinPointedSets::morphism_json(const PointedMap& f) const {
    return {{"domain", f.dom()}, {"codomain", f.cod()}, {"images", f.images()}};
}

PointedSet FinPointedSets::parse_object(const json& j) const {
    if (!j.is_object() || !j.contains("size") || !j["size"].is_number_integer() || j["size"].get<long long>() < 0) throw parse_error("pointed set: expected {\"size\": n}");
    return {j["size"].get<int>()};
}

PointedMap FinPointedSets::parse_morphism(const json& j) const {
    if (!j.is_object()) throw parse_error("pointed map: expected an object");
    for (auto key: {"domain", "codomain"}) {
        if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() < 0) throw parse_error(std::string("pointed map/") + key + ": expected a nonnegative integer");
    }
    if (!j.contains("images") || !j["images"].is_array()) throw parse_error("pointed map/images: expected an array");
    std::vector<int> im;
    for (std::size_t k = 0; k < j["images"].size(); ++k) {
        const auto& v = j["images"][k];
        if (!v.is_number_integer()) throw parse_error("pointed map/images/" + std::to_string(k) + ": expected an integer");
        im.push_back(v.get<int>());
    }
    return {j["domain"].get<int>(), j["codomain"].get<int>(), std::move(im)};
}

} // namespace protex
