//! Independent reference arithmetic for the integration tests.
//!
//! Shares no code with the library: its own complex type, explicit 4×4
//! Kronecker products and dense matrix-vector products.

#![allow(dead_code)]

use std::ops::{Add, Mul, Sub};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct C {
    pub re: f64,
    pub im: f64,
}

pub const fn c(re: f64, im: f64) -> C {
    C { re, im }
}

impl C {
    pub fn conj(self) -> C {
        c(self.re, -self.im)
    }
    pub fn abs2(self) -> f64 {
        self.re * self.re + self.im * self.im
    }
    pub fn cis(phi: f64) -> C {
        c(phi.cos(), phi.sin())
    }
    pub fn scale(self, k: f64) -> C {
        c(self.re * k, self.im * k)
    }
}

impl Add for C {
    type Output = C;
    fn add(self, o: C) -> C {
        c(self.re + o.re, self.im + o.im)
    }
}

impl Sub for C {
    type Output = C;
    fn sub(self, o: C) -> C {
        c(self.re - o.re, self.im - o.im)
    }
}

impl Mul for C {
    type Output = C;
    fn mul(self, o: C) -> C {
        c(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }
}

pub type M2 = [[C; 2]; 2];
pub type M4 = [[C; 4]; 4];
pub type V4 = [C; 4];

pub fn id2() -> M2 {
    [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]]
}

/// Outer product |v⟩⟨v| for v = (cos θ, e^{iφ} sin θ).
pub fn projector(theta: f64, phi: f64) -> M2 {
    let v = [c(theta.cos(), 0.0), C::cis(phi).scale(theta.sin())];
    let mut m = [[c(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            m[i][j] = v[i] * v[j].conj();
        }
    }
    m
}

pub fn kron(a: &M2, b: &M2) -> M4 {
    let mut m = [[c(0.0, 0.0); 4]; 4];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    m[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    m
}

pub fn matvec(m: &M4, v: &V4) -> V4 {
    let mut out = [c(0.0, 0.0); 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i] = out[i] + m[i][j] * v[j];
        }
    }
    out
}

pub fn braket(u: &V4, v: &V4) -> C {
    let mut acc = c(0.0, 0.0);
    for i in 0..4 {
        acc = acc + u[i].conj() * v[i];
    }
    acc
}

pub fn expect(m: &M4, v: &V4) -> f64 {
    braket(v, &matvec(m, v)).re
}

pub fn normalize(v: V4) -> V4 {
    let n: f64 = v.iter().map(|z| z.abs2()).sum::<f64>().sqrt();
    v.map(|z| z.scale(1.0 / n))
}

/// p|10⟩ + q|01⟩ + r|00⟩ for real coefficients, normalized.
pub fn state(p: f64, q: f64, r: f64) -> V4 {
    normalize([c(r, 0.0), c(q, 0.0), c(p, 0.0), c(0.0, 0.0)])
}

pub fn antisymmetric() -> V4 {
    let h = 0.5f64.sqrt();
    [c(0.0, 0.0), c(-h, 0.0), c(h, 0.0), c(0.0, 0.0)]
}

/// CH value for angles `[θa, φa, θa', φa', θb, φb, θb', φb']`.
pub fn ch(v: &V4, x: &[f64; 8]) -> f64 {
    let pa = projector(x[0], x[1]);
    let pa2 = projector(x[2], x[3]);
    let pb = projector(x[4], x[5]);
    let pb2 = projector(x[6], x[7]);
    let i = id2();
    expect(&kron(&pa2, &i), v) + expect(&kron(&i, &pb2), v)
        - expect(&kron(&pa2, &pb2), v)
        - expect(&kron(&pa2, &pb), v)
        - expect(&kron(&pa, &pb2), v)
        + expect(&kron(&pa, &pb), v)
}

/// Spin-1/2 projector onto Bloch direction (polar β, azimuth α): (I + n·σ)/2.
pub fn spin_projector(beta: f64, alpha: f64) -> M2 {
    let (nx, ny, nz) = (
        beta.sin() * alpha.cos(),
        beta.sin() * alpha.sin(),
        beta.cos(),
    );
    [
        [c((1.0 + nz) / 2.0, 0.0), c(nx / 2.0, -ny / 2.0)],
        [c(nx / 2.0, ny / 2.0), c((1.0 - nz) / 2.0, 0.0)],
    ]
}

/// Two-qubit singlet (|↑↓⟩ - |↓↑⟩)/√2 in |s_1 s_2⟩ order with ↑ = index 0.
pub fn singlet() -> V4 {
    let h = 0.5f64.sqrt();
    [c(0.0, 0.0), c(h, 0.0), c(-h, 0.0), c(0.0, 0.0)]
}
