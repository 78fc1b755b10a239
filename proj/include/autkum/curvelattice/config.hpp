#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "autkum/error.hpp"
#include "autkum/exactfield/prime_field.hpp"

namespace autkum {

using Labels = std::shared_ptr<const std::vector<std::string>>;

/// Integer combination of the curves of one configuration.
class Divisor {
public:
    explicit Divisor(Labels labels) : labels_(std::move(labels)), c_(labels_->size(), 0) {}
    Divisor(Labels labels, std::vector<i64> coeffs) : labels_(std::move(labels)), c_(std::move(coeffs))
    {
        if (c_.size() != labels_->size()) throw Error(Errc::ConfigMismatch, "coefficient count differs from label count");
    }

    const Labels& labels() const noexcept { return labels_; }
    const std::vector<i64>& coeffs() const noexcept { return c_; }
    size_t size() const noexcept { return c_.size(); }
    i64 operator[](size_t i) const { return c_[i]; }

    i64 coeff(const std::string& label) const
    {
        auto it = std::find(labels_->begin(), labels_->end(), label);
        if (it == labels_->end()) throw Error(Errc::ConfigMismatch, "unknown curve " + label);
        return c_[static_cast<size_t>(it - labels_->begin())];
    }

    bool is_zero() const noexcept
    {
        return std::all_of(c_.begin(), c_.end(), [](i64 x) { return x == 0; });
    }

    /// Labels with nonzero coefficient, in label order.
    std::vector<size_t> support() const
    {
        std::vector<size_t> s;
        for (size_t i = 0; i < c_.size(); ++i)
            if (c_[i]) s.push_back(i);
        return s;
    }

    bool same_labels(const Divisor& o) const { return labels_ == o.labels_ || *labels_ == *o.labels_; }

    friend Divisor operator+(const Divisor& a, const Divisor& b)
    {
        a.require_same(b);
        Divisor r = a;
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
        return r;
    }
    friend Divisor operator-(const Divisor& a, const Divisor& b) { return a + (-1) * b; }
    friend Divisor operator*(i64 k, const Divisor& d)
    {
        Divisor r = d;
        for (auto& x : r.c_) x *= k;
        return r;
    }
    friend bool operator==(const Divisor& a, const Divisor& b) { return a.same_labels(b) && a.c_ == b.c_; }

    void require_same(const Divisor& o) const
    {
        if (!same_labels(o)) throw Error(Errc::ConfigMismatch, "divisors live on different configurations");
    }

private:
    Labels labels_;
    std::vector<i64> c_;
};

/// A marked point with the curves through it. `coord` is its x-coordinate on
/// C when it lies there ("inf", "0", "1", "t").
struct NamedPoint {
    std::string id;
    std::vector<std::string> curves;
    std::optional<std::string> coord;
};

/// Where a Kummer curve comes from on E x F: an E-curve sits over a 2-torsion
/// point of F, an F-curve over one of E, a node curve over a pair.
struct CurveOrigin {
    enum class Kind { ECurve, FCurve, Node } kind;
    int e_torsion; // index into the 2-torsion of E, -1 if the curve covers E
    int f_torsion; // index into the 2-torsion of F, -1 if the curve covers F
};

struct BlowupRecord {
    std::string exceptional;
    std::vector<std::string> through; // curves through the center, multiplicity 1 each
    std::string center;               // point id, "generic on <label>" or "generic"
};

/// Labeled smooth rational curves with their Gram matrix, marked points and
/// the tracked canonical divisor. Immutable once built.
class CurveConfig {
public:
    struct Data {
        std::vector<std::string> labels;
        std::vector<std::vector<i64>> gram;
        std::vector<NamedPoint> points;
        std::vector<i64> canonical;
        std::vector<std::string> fixed_locus;
        std::map<std::string, std::string> aliases;
        std::map<std::string, CurveOrigin> origins;
        std::vector<BlowupRecord> blowups;
    };

    explicit CurveConfig(Data d) : labels_(std::make_shared<const std::vector<std::string>>(d.labels)), d_(std::move(d))
    {
        const size_t n = d_.labels.size();
        if (d_.canonical.empty()) d_.canonical.assign(n, 0);
        if (d_.gram.size() != n || d_.canonical.size() != n)
            throw Error(Errc::ConfigMismatch, "gram/canonical size differs from label count");
        for (size_t i = 0; i < n; ++i) {
            if (d_.gram[i].size() != n) throw Error(Errc::ConfigMismatch, "gram matrix is not square");
            index_[d_.labels[i]] = i;
        }
        if (index_.size() != n) throw Error(Errc::ConfigMismatch, "duplicate curve label");
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (d_.gram[i][j] != d_.gram[j][i]) throw Error(Errc::ConfigMismatch, "gram matrix is not symmetric");
        for (const auto& pt : d_.points)
            for (const auto& c : pt.curves)
                if (!index_.count(c)) throw Error(Errc::ConfigMismatch, "point " + pt.id + " on unknown curve " + c);
        for (const auto& pt : d_.points)
            for (size_t a = 0; a < pt.curves.size(); ++a)
                for (size_t b = a + 1; b < pt.curves.size(); ++b)
                    if (d_.gram[index_[pt.curves[a]]][index_[pt.curves[b]]] < 1)
                        throw Error(Errc::ConfigMismatch, "curves through " + pt.id + " do not meet in the gram matrix");
    }

    const Labels& labels() const noexcept { return labels_; }
    size_t size() const noexcept { return d_.labels.size(); }
    const Data& data() const noexcept { return d_; }

    std::string resolve(const std::string& name) const
    {
        auto it = d_.aliases.find(name);
        return it == d_.aliases.end() ? name : it->second;
    }
    bool has_label(const std::string& name) const { return index_.count(resolve(name)) > 0; }
    size_t index(const std::string& name) const
    {
        auto it = index_.find(resolve(name));
        if (it == index_.end()) throw Error(Errc::ConfigMismatch, "unknown curve " + name);
        return it->second;
    }

    i64 gram(size_t i, size_t j) const { return d_.gram.at(i).at(j); }
    i64 gram(const std::string& a, const std::string& b) const { return gram(index(a), index(b)); }
    const std::vector<std::vector<i64>>& gram_matrix() const noexcept { return d_.gram; }

    const std::vector<NamedPoint>& points() const noexcept { return d_.points; }

    /// Lookup by id or alias, or by "A:B" naming the unique point where A and B meet.
    const NamedPoint& point(const std::string& id) const
    {
        const std::string key = resolve(id);
        for (const auto& pt : d_.points)
            if (pt.id == key) return pt;
        auto colon = key.find(':');
        if (colon != std::string::npos) {
            std::set<std::string> want{resolve(key.substr(0, colon)), resolve(key.substr(colon + 1))};
            const NamedPoint* hit = nullptr;
            for (const auto& pt : d_.points) {
                if (std::set<std::string>(pt.curves.begin(), pt.curves.end()) == want) {
                    if (hit) throw Error(Errc::NoSuchPoint, "ambiguous point " + id);
                    hit = &pt;
                }
            }
            if (hit) return *hit;
        }
        throw Error(Errc::NoSuchPoint, "no point named " + id);
    }

    const std::vector<std::string>& fixed_locus() const noexcept { return d_.fixed_locus; }
    const std::vector<BlowupRecord>& blowups() const noexcept { return d_.blowups; }
    const std::map<std::string, CurveOrigin>& origins() const noexcept { return d_.origins; }

    Divisor canonical() const { return Divisor(labels_, d_.canonical); }
    Divisor zero() const { return Divisor(labels_); }
    Divisor curve(const std::string& name) const
    {
        std::vector<i64> c(size(), 0);
        c[index(name)] = 1;
        return Divisor(labels_, std::move(c));
    }
    Divisor divisor(std::initializer_list<std::pair<std::string, i64>> terms) const
    {
        std::vector<i64> c(size(), 0);
        for (const auto& [name, k] : terms) c[index(name)] += k;
        return Divisor(labels_, std::move(c));
    }

    /// Copy with one symmetric Gram entry replaced; used for fault injection.
    CurveConfig with_gram_entry(const std::string& a, const std::string& b, i64 v) const
    {
        Data d = d_;
        const size_t i = index(a), j = index(b);
        d.gram[i][j] = d.gram[j][i] = v;
        d.points.erase(std::remove_if(d.points.begin(), d.points.end(),
                                      [&](const NamedPoint& pt) {
                                          auto has = [&](const std::string& c) {
                                              return std::find(pt.curves.begin(), pt.curves.end(), c) != pt.curves.end();
                                          };
                                          return v < 1 && i != j && has(d.labels[i]) && has(d.labels[j]);
                                      }),
                       d.points.end());
        return CurveConfig(std::move(d));
    }

    void require(const Divisor& D) const
    {
        if (D.labels() != labels_ && *D.labels() != *labels_)
            throw Error(Errc::ConfigMismatch, "divisor belongs to a different configuration");
    }

private:
    Labels labels_;
    Data d_;
    std::map<std::string, size_t> index_;
};

/// Bilinear pairing through the Gram matrix.
inline i64 intersect(const CurveConfig& cfg, const Divisor& a, const Divisor& b)
{
    cfg.require(a);
    cfg.require(b);
    i64 s = 0;
    for (size_t i : a.support())
        for (size_t j : b.support()) s += a[i] * b[j] * cfg.gram(i, j);
    return s;
}

inline Divisor canonical_class(const CurveConfig& cfg) { return cfg.canonical(); }

/// D.D, with the parity constraint D.D + K.D even (for K = 0: D.D even).
/// A violation means the configuration is corrupted.
inline i64 self_intersection(const CurveConfig& cfg, const Divisor& D)
{
    const i64 dd = intersect(cfg, D, D);
    const i64 kd = intersect(cfg, cfg.canonical(), D);
    if ((dd + kd) % 2 != 0) throw Error(Errc::LatticeParityError, "D.D + K.D is odd");
    return dd;
}

} // namespace autkum
