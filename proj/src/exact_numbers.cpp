#include "trig_enclose/exact_numbers.hpp"

#include <mutex>
#include <vector>

#include "trig_enclose/errors.hpp"

namespace trig_enclose {

namespace {

// Seidel's boustrophedon triangle for the zigzag numbers Z_n:
//   e(0,0) = 1;  e(n,0) = 0;  e(n,k) = e(n,k-1) + e(n-1,n-k);  Z_n = e(n,n).
// Z_{2n} = |E_{2n}| (secant numbers), Z_{2n-1} = T_n (tangent numbers).
class ZigzagTable {
public:
    Int get(unsigned long n) {
        std::lock_guard<std::mutex> lock(mutex_);
        while (zigzag_.size() <= n) grow();
        return zigzag_[n];
    }

private:
    void grow() {
        const unsigned long n = zigzag_.size();
        if (n == 0) {
            row_ = {Int(1)};
            zigzag_ = {Int(1)};
            return;
        }
        std::vector<Int> next(n + 1);
        next[0] = 0;
        for (unsigned long k = 1; k <= n; ++k) next[k] = next[k - 1] + row_[n - k];
        row_ = std::move(next);
        zigzag_.push_back(row_[n]);
    }

    std::mutex mutex_;
    std::vector<Int> row_;
    std::vector<Int> zigzag_;
};

ZigzagTable& zigzag_table() {
    static ZigzagTable table;
    return table;
}

void check_index(unsigned long n, const char* op) {
    if (n > kMaxIndex)
        throw RejectedInput(std::string(op) + ": index " + std::to_string(n) +
                            " above limit " + std::to_string(kMaxIndex));
}

} // namespace

Int tangent_number(unsigned long n) {
    if (n == 0) throw RejectedInput("tangent_number: n must be >= 1");
    check_index(2 * n - 1, "tangent_number");
    return zigzag_table().get(2 * n - 1);
}

Int secant_number(unsigned long n) {
    check_index(2 * n, "secant_number");
    return zigzag_table().get(2 * n);
}

Rat bernoulli(unsigned long n) {
    check_index(n, "bernoulli");
    if (n == 0) return Rat(1);
    if (n == 1) return Rat(-1, 2);
    if (n % 2 == 1) return Rat(0);
    const unsigned long m = n / 2; // n = 2m
    // |B_{2m}| = 2m * T_m / (2^{2m}(2^{2m}-1)); sign (-1)^{m+1}.
    Int p = pow2(n);
    Rat mag = make_rat(Int(n) * tangent_number(m), p * (p - 1));
    return (m % 2 == 1) ? mag : -mag;
}

Rat euler_number(unsigned long n) {
    check_index(n, "euler_number");
    if (n % 2 == 1) return Rat(0);
    const unsigned long m = n / 2;
    Int mag = secant_number(m);
    return Rat((m % 2 == 0) ? mag : -mag);
}

FunctionId parse_function_id(const std::string& name) {
    if (name == "tan") return FunctionId::tan;
    if (name == "tanh") return FunctionId::tanh;
    if (name == "sec") return FunctionId::sec;
    if (name == "cot") return FunctionId::cot;
    if (name == "csc") return FunctionId::csc;
    if (name == "wilker") return FunctionId::wilker;
    if (name == "huygens") return FunctionId::huygens;
    if (name == "sec2tan") return FunctionId::sec2tan;
    throw RejectedInput("unknown function id '" + name + "'");
}

std::string function_id_name(FunctionId id) {
    switch (id) {
        case FunctionId::tan: return "tan";
        case FunctionId::tanh: return "tanh";
        case FunctionId::sec: return "sec";
        case FunctionId::cot: return "cot";
        case FunctionId::csc: return "csc";
        case FunctionId::wilker: return "wilker";
        case FunctionId::huygens: return "huygens";
        case FunctionId::sec2tan: return "sec2tan";
    }
    throw RejectedInput("unknown function id");
}

Rat series_coefficient(FunctionId id, unsigned long j) {
    check_index(j, "series_coefficient");
    switch (id) {
        case FunctionId::tan: {
            if (j < 1) throw RejectedInput("series_coefficient(tan): j >= 1");
            Int p = pow2(2 * j);
            return make_rat(p * (p - 1), factorial(2 * j)) * abs(bernoulli(2 * j));
        }
        case FunctionId::tanh: {
            if (j < 1) throw RejectedInput("series_coefficient(tanh): j >= 1");
            Int p = pow2(2 * j);
            return make_rat(p * (p - 1), factorial(2 * j)) * bernoulli(2 * j);
        }
        case FunctionId::sec:
            return Rat(abs(euler_number(2 * j))) / Rat(factorial(2 * j));
        case FunctionId::cot: {
            if (j < 1) throw RejectedInput("series_coefficient(cot): j >= 1");
            return -make_rat(pow2(2 * j), factorial(2 * j)) * abs(bernoulli(2 * j));
        }
        case FunctionId::csc: {
            if (j < 1) throw RejectedInput("series_coefficient(csc): j >= 1");
            return make_rat(pow2(2 * j) - 2, factorial(2 * j)) * abs(bernoulli(2 * j));
        }
        case FunctionId::wilker: {
            if (j < 1) throw RejectedInput("series_coefficient(wilker): j >= 1");
            return make_rat(Int(j) * pow2(2 * j + 3), factorial(2 * j + 2)) *
                   abs(bernoulli(2 * j + 2));
        }
        case FunctionId::huygens: {
            if (j < 1) throw RejectedInput("series_coefficient(huygens): j >= 1");
            return make_rat(pow2(2 * j) - 4, factorial(2 * j)) * abs(bernoulli(2 * j));
        }
        case FunctionId::sec2tan: {
            if (j < 1) throw RejectedInput("series_coefficient(sec2tan): j >= 1");
            Int p = pow2(2 * j + 2);
            return make_rat(Int(2 * j) * p * (p - 1), factorial(2 * j + 2)) *
                   abs(bernoulli(2 * j + 2));
        }
    }
    throw RejectedInput("series_coefficient: unknown function id");
}

RatioBounds bernoulli_ratio_bounds(unsigned long n) {
    if (n == 0) throw RejectedInput("bernoulli_ratio_bounds: n >= 1");
    check_index(n, "bernoulli_ratio_bounds");
    // 2/(2 pi)^{2n} = 2^{1-2n} pi^{-2n}
    Rat lo_coef = Rat(2) / Rat(pow2(2 * n));
    // 2/((2 pi)^{2n}(1-2^{1-2n})) = 2^{1-2n}/(1-2^{1-2n}) pi^{-2n}
    Rat one_minus = Rat(1) - Rat(2) / Rat(pow2(2 * n));
    Rat hi_coef = lo_coef / one_minus;
    return RatioBounds{PiPower{lo_coef, -static_cast<int>(2 * n)},
                       PiPower{hi_coef, -static_cast<int>(2 * n)}};
}

RatioBounds euler_ratio_bounds(unsigned long n) {
    check_index(n, "euler_ratio_bounds");
    Rat four_pow = Rat(pow2(2 * (n + 1)));
    Rat denom = Rat(1) + Rat(1) / Rat(int_pow(Int(3), 2 * n + 1));
    return RatioBounds{PiPower{four_pow / denom, -static_cast<int>(2 * n + 1)},
                       PiPower{four_pow, -static_cast<int>(2 * n + 1)}};
}

} // namespace trig_enclose
