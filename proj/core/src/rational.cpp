#include "tetherplan/rational.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <ostream>

#include "tetherplan/errors.hpp"

namespace tetherplan {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 uabs128(i128 v) {
    return v < 0 ? ~static_cast<u128>(v) + 1 : static_cast<u128>(v);
}

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Operands bounded by this make the int128 add/mul paths overflow-free.
constexpr std::int64_t kGuard = std::int64_t(1) << 62;

bool guarded(const Rat& r) {
    return r.is_small() && std::llabs(r.small_num()) < kGuard &&
           r.small_den() < kGuard;
}

mpz_class mpz_from_u128(u128 u) {
    mpz_class r = static_cast<unsigned long>(u >> 64);
    r <<= 64;
    r += static_cast<unsigned long>(u & ~0ULL);
    return r;
}

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

Rat::Rat(std::int64_t n, std::int64_t d) {
    if (d == 0) throw ParseError("rational with zero denominator");
    i128 nn = n, dd = d;
    if (dd < 0) {
        nn = -nn;
        dd = -dd;
    }
    u128 g = gcd128(uabs128(nn), static_cast<u128>(dd));
    if (g > 1) {
        nn /= static_cast<i128>(g);
        dd /= static_cast<i128>(g);
    }
    num_ = static_cast<std::int64_t>(nn);
    den_ = static_cast<std::int64_t>(dd);
}

Rat::Rat(const mpq_class& q) { set_from_mpq(q); }

Rat::Rat(const Rat& o) : num_(o.num_), den_(o.den_) {
    if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
}

Rat& Rat::operator=(const Rat& o) {
    if (this != &o) {
        num_ = o.num_;
        den_ = o.den_;
        big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
}

void Rat::set_from_mpq(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    if (c.get_num().fits_slong_p() && c.get_den().fits_slong_p()) {
        num_ = c.get_num().get_si();
        den_ = c.get_den().get_si();
        big_.reset();
    } else {
        num_ = 0;
        den_ = 1;
        big_ = std::make_unique<mpq_class>(std::move(c));
    }
}

mpq_class Rat::to_mpq() const {
    if (big_) return *big_;
    mpq_class q(static_cast<long>(num_), static_cast<long>(den_));
    q.canonicalize();
    return q;
}

namespace {

Rat make_from_i128(i128 n, i128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    u128 g = gcd128(uabs128(n), static_cast<u128>(d));
    if (g > 1) {
        n /= static_cast<i128>(g);
        d /= static_cast<i128>(g);
    }
    constexpr i128 lo = std::numeric_limits<std::int64_t>::min();
    constexpr i128 hi = std::numeric_limits<std::int64_t>::max();
    if (n >= lo && n <= hi && d <= hi) {
        return Rat(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
    }
    mpq_class q(mpz_from_u128(uabs128(n)), mpz_from_u128(static_cast<u128>(d)));
    if (n < 0) q = -q;
    return Rat(q);
}

}  // namespace

Rat Rat::from_i128(__int128 num, __int128 den) {
    if (den == 0) throw ParseError("rational with zero denominator");
    return make_from_i128(num, den);
}

int Rat::sign() const {
    if (big_) return sgn(*big_);
    return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

Rat Rat::abs() const { return sign() < 0 ? -*this : *this; }

Rat Rat::operator-() const {
    if (is_small() && num_ != std::numeric_limits<std::int64_t>::min()) {
        Rat r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    return Rat(mpq_class(-to_mpq()));
}

Rat Rat::operator+(const Rat& o) const {
    if (guarded(*this) && guarded(o)) {
        i128 n = static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_;
        i128 d = static_cast<i128>(den_) * o.den_;
        return make_from_i128(n, d);
    }
    return Rat(mpq_class(to_mpq() + o.to_mpq()));
}

Rat Rat::operator-(const Rat& o) const {
    if (guarded(*this) && guarded(o)) {
        i128 n = static_cast<i128>(num_) * o.den_ - static_cast<i128>(o.num_) * den_;
        i128 d = static_cast<i128>(den_) * o.den_;
        return make_from_i128(n, d);
    }
    return Rat(mpq_class(to_mpq() - o.to_mpq()));
}

Rat Rat::operator*(const Rat& o) const {
    if (guarded(*this) && guarded(o)) {
        i128 n = static_cast<i128>(num_) * o.num_;
        i128 d = static_cast<i128>(den_) * o.den_;
        return make_from_i128(n, d);
    }
    return Rat(mpq_class(to_mpq() * o.to_mpq()));
}

Rat Rat::operator/(const Rat& o) const {
    if (o.sign() == 0) throw ParseError("division by zero");
    if (guarded(*this) && guarded(o)) {
        i128 n = static_cast<i128>(num_) * o.den_;
        i128 d = static_cast<i128>(den_) * o.num_;
        return make_from_i128(n, d);
    }
    return Rat(mpq_class(to_mpq() / o.to_mpq()));
}

int Rat::compare(const Rat& o) const {
    if (is_small() && o.is_small()) {
        i128 lhs = static_cast<i128>(num_) * o.den_;
        i128 rhs = static_cast<i128>(o.num_) * den_;
        return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
    }
    return mpq_cmp(to_mpq().get_mpq_t(), o.to_mpq().get_mpq_t());
}

Rat Rat::parse(const std::string& raw) {
    std::string s = raw;
    // trim surrounding whitespace only
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("empty rational literal");
    s = s.substr(b, e - b + 1);

    auto is_digits = [](const std::string& t) {
        if (t.empty()) return false;
        return std::all_of(t.begin(), t.end(),
                           [](unsigned char c) { return std::isdigit(c); });
    };

    bool neg = false;
    std::string body = s;
    if (body[0] == '+' || body[0] == '-') {
        neg = body[0] == '-';
        body = body.substr(1);
    }

    auto slash = body.find('/');
    if (slash != std::string::npos) {
        std::string ns = body.substr(0, slash);
        std::string ds = body.substr(slash + 1);
        if (!is_digits(ns) || !is_digits(ds))
            throw ParseError("bad rational literal: " + raw);
        mpz_class n(ns, 10), d(ds, 10);
        if (d == 0) throw ParseError("zero denominator: " + raw);
        if (neg) n = -n;
        return Rat(mpq_class(n, d));
    }

    auto dot = body.find('.');
    mpz_class n, d = 1;
    if (dot == std::string::npos) {
        if (!is_digits(body)) throw ParseError("bad rational literal: " + raw);
        n = mpz_class(body, 10);
    } else {
        std::string ip = body.substr(0, dot);
        std::string fp = body.substr(dot + 1);
        if (!is_digits(ip) || !is_digits(fp))
            throw ParseError("bad rational literal: " + raw);
        n = mpz_class(ip + fp, 10);
        mpz_ui_pow_ui(d.get_mpz_t(), 10, fp.size());
    }
    if (neg) n = -n;
    return Rat(mpq_class(n, d));
}

std::string Rat::to_string() const {
    mpq_class q = to_mpq();
    mpz_class num = q.get_num(), den = q.get_den();
    if (den == 1) return num.get_str();

    mpz_class d = den;
    unsigned twos = 0, fives = 0;
    while (mpz_divisible_ui_p(d.get_mpz_t(), 2)) {
        mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), 2);
        ++twos;
    }
    while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) {
        mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), 5);
        ++fives;
    }
    if (d != 1) return num.get_str() + "/" + den.get_str();

    unsigned k = std::max(twos, fives);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, k);
    mpz_class digits = num * scale / den;  // exact by construction
    bool neg = digits < 0;
    std::string ds = mpz_class(::abs(digits)).get_str();
    if (ds.size() <= k) ds.insert(0, k + 1 - ds.size(), '0');
    ds.insert(ds.size() - k, ".");
    return (neg ? "-" : "") + ds;
}

std::string Rat::to_decimal(int digits) const {
    mpq_class q = to_mpq();
    mpz_class num = q.get_num(), den = q.get_den();
    bool neg = num < 0;
    if (neg) num = -num;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    mpz_class scaled = num * scale, quo, rem;
    mpz_tdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(),
                den.get_mpz_t());
    if (2 * rem >= den) quo += 1;  // round half away from zero
    std::string ds = quo.get_str();
    if (digits == 0) return (neg && quo != 0 ? "-" : "") + ds;
    if (ds.size() <= static_cast<std::size_t>(digits))
        ds.insert(0, digits + 1 - ds.size(), '0');
    ds.insert(ds.size() - digits, ".");
    bool nonzero = quo != 0;
    return (neg && nonzero ? "-" : "") + ds;
}

std::size_t Rat::hash() const {
    if (is_small()) {
        return mix64(static_cast<std::uint64_t>(num_) * 0x9e3779b97f4a7c15ULL ^
                     mix64(static_cast<std::uint64_t>(den_)));
    }
    // big values are rare; hash a canonical rendering
    std::string s = big_->get_num().get_str() + "/" + big_->get_den().get_str();
    return std::hash<std::string>{}(s);
}

const Rat& Rat::zero() {
    static const Rat z(0);
    return z;
}

const Rat& Rat::one() {
    static const Rat o(1);
    return o;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.to_string();
}

std::optional<Rat> exact_sqrt(const Rat& v) {
    int s = v.sign();
    if (s < 0) return std::nullopt;
    if (s == 0) return Rat(0);
    mpq_class q = v.to_mpq();
    mpz_class num = q.get_num(), den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) ||
        !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rat(mpq_class(rn, rd));
}

BudgetValue effective_budget(const Rat& tether, const Rat& sep) {
    if (sep.sign() < 0) throw InvalidConfig("line separation must be >= 0");
    if (sep >= tether)
        throw TetherTooShort("line separation " + sep.to_string() +
                             " leaves no vertical clearance for tether " +
                             tether.to_string());
    BudgetValue b;
    b.square = tether * tether - sep * sep;
    b.root = exact_sqrt(b.square);
    return b;
}

int BudgetValue::compare(const Rat& r) const {
    if (r.sign() < 0) return 1;  // budget is nonnegative
    return square.compare(r * r);
}

}  // namespace tetherplan
