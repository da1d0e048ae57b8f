#!/usr/bin/env python3
"""Independent reference computations for the expected values frozen into
the C++ tests. Pure Python integers only; run it to regenerate
derived_values.txt."""

import itertools


def wrap(v, w):
    return v % (1 << w)


def signed(v, w):
    v = wrap(v, w)
    return v - (1 << w) if v >= 1 << (w - 1) else v


def ring_mul(a, b, q, n):
    d = 1 << n
    full = [0] * (2 * d - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            full[i + j] += x * y
    # divide by X^d + 1 from the top
    for k in range(len(full) - 1, d - 1, -1):
        c = full[k]
        full[k] = 0
        full[k - d] -= c
    return [c % q for c in full[:d]]


def monomial(c, i, q, n):
    d = 1 << n
    coeffs = [0] * (d + i + 1)
    coeffs[i] = c
    # long division of c X^i by X^d + 1
    for k in range(len(coeffs) - 1, d - 1, -1):
        t = coeffs[k]
        coeffs[k] = 0
        coeffs[k - d] -= t
    return [x % q for x in coeffs[:d]]


def sdiv(a, b, w):
    if b == 0:
        return "poison"
    sa, sb = signed(a, w), signed(b, w)
    qt = abs(sa) // abs(sb) * (1 if (sa < 0) == (sb < 0) else -1)
    if not -(1 << (w - 1)) <= qt < (1 << (w - 1)):
        return "poison"
    return wrap(qt, w)


def for_loop(start, step, niters, seed, body):
    i, v = start, seed
    for _ in range(niters):
        v = body(i, v)
        i += step
    return v


def main():
    out = []
    out.append(("poly_monomial_1_2_q7_n1", monomial(1, 2, 7, 1)))
    out.append(("poly_square_1_plus_x_q7_n1", ring_mul([1, 1], [1, 1], 7, 1)))
    out.append(("poly_generator_q7_n1",
                [(x + y) % 7 for x, y in zip(monomial(1, 2, 7, 1), [1, 0])]))
    out.append(("llvm_add_w2_3_2", wrap(3 + 2, 2)))
    out.append(("llvm_sdiv_w8_m128_m1", sdiv(wrap(-128, 8), wrap(-1, 8), 8)))
    out.append(("llvm_icmp_slt_w2_2_1", int(signed(2, 2) < signed(1, 2))))
    out.append(("for_0_1_3_0_v_plus_i", for_loop(0, 1, 3, 0, lambda i, v: v + i)))
    out.append(("for_v_plus_4_n5_seed_c10", for_loop(0, 1, 5, 10, lambda i, v: v + 4)))
    out.append(("for_reverse_v_times_2_n4_seed3", for_loop(0, 1, 4, 3, lambda i, v: v * 2)))
    # program y = x + 1; p = y; z = y - 1; ret z at x = 7
    x = 7
    y = x + 1
    z = y - 1
    out.append(("intro_program_x7", z))
    out.append(("enum_i2_i2", (4 + 1) ** 2))
    out.append(("enum_ring_q7_n1", 7 ** 2))
    # a + b vs a xor b: first counterexample in lexicographic order at w=2
    # over the universe [poison, 0, 1, 2, 3] (poison gives equal results).
    cex = next((a, b) for a, b in itertools.product(range(4), repeat=2)
               if wrap(a + b, 2) != a ^ b)
    out.append(("add_vs_xor_w2_first_cex", list(cex)))
    out.append(("add_vs_xor_w1_holds",
                all(wrap(a + b, 1) == a ^ b for a in range(2) for b in range(2))))
    for name, value in out:
        print(f"{name} = {value}")


if __name__ == "__main__":
    main()
