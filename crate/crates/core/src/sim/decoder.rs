//! Flooding belief propagation on the Tanner graph of a check matrix, in the
//! LLR domain (positive LLR favours bit 0).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::BitMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BpAlgorithm {
    SumProduct,
    MinSum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecoderParams {
    pub algorithm: BpAlgorithm,
    pub max_iterations: usize,
    /// Stop as soon as the hard decision satisfies every check.
    pub early_stop: bool,
}

impl Default for DecoderParams {
    fn default() -> Self {
        DecoderParams {
            algorithm: BpAlgorithm::SumProduct,
            max_iterations: 50,
            early_stop: true,
        }
    }
}

impl DecoderParams {
    pub fn validate(&self) -> Result<()> {
        if self.max_iterations == 0 {
            return Err(Error::InvalidConfig("max_iterations must be >= 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecodeResult {
    pub bits: Vec<u8>,
    pub iterations: usize,
    pub syndrome_ok: bool,
}

/// Edge-indexed Tanner graph. Edges are grouped by check; `var_edges` lists
/// the edges of each variable.
#[derive(Debug, Clone)]
pub struct BpDecoder {
    n: usize,
    check_start: Vec<usize>,
    edge_var: Vec<usize>,
    var_edges: Vec<Vec<usize>>,
}

const LLR_CLAMP: f64 = 30.0;

impl BpDecoder {
    pub fn new(h: &BitMatrix) -> Self {
        let n = h.cols();
        let mut check_start = Vec::with_capacity(h.rows() + 1);
        let mut edge_var = Vec::new();
        let mut var_edges = vec![Vec::new(); n];
        check_start.push(0);
        for c in 0..h.rows() {
            for v in h.row_ones(c) {
                var_edges[v].push(edge_var.len());
                edge_var.push(v);
            }
            check_start.push(edge_var.len());
        }
        BpDecoder {
            n,
            check_start,
            edge_var,
            var_edges,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn checks(&self) -> usize {
        self.check_start.len() - 1
    }

    fn edges_of(&self, c: usize) -> std::ops::Range<usize> {
        self.check_start[c]..self.check_start[c + 1]
    }

    pub fn syndrome_ok(&self, bits: &[u8]) -> bool {
        (0..self.checks()).all(|c| {
            self.edges_of(c)
                .fold(0u8, |acc, e| acc ^ bits[self.edge_var[e]])
                == 0
        })
    }

    pub fn decode(&self, llr: &[f64], params: &DecoderParams) -> DecodeResult {
        assert_eq!(llr.len(), self.n, "LLR length must equal the code length");
        let hard = |total: &[f64]| -> Vec<u8> { total.iter().map(|&t| (t < 0.0) as u8).collect() };

        let mut bits = hard(llr);
        if params.early_stop && self.syndrome_ok(&bits) {
            return DecodeResult {
                bits,
                iterations: 0,
                syndrome_ok: true,
            };
        }

        let mut v2c: Vec<f64> = self.edge_var.iter().map(|&v| llr[v]).collect();
        let mut c2v = vec![0.0; v2c.len()];
        let mut total = llr.to_vec();
        let mut scratch = Vec::new();
        let mut iterations = 0;
        let mut ok = false;

        while iterations < params.max_iterations {
            iterations += 1;
            for c in 0..self.checks() {
                let edges = self.edges_of(c);
                match params.algorithm {
                    BpAlgorithm::SumProduct => {
                        sum_product_check(&v2c[edges.clone()], &mut c2v[edges], &mut scratch)
                    }
                    BpAlgorithm::MinSum => min_sum_check(&v2c[edges.clone()], &mut c2v[edges]),
                }
            }
            for (v, edges) in self.var_edges.iter().enumerate() {
                let t = llr[v] + edges.iter().map(|&e| c2v[e]).sum::<f64>();
                total[v] = t;
                for &e in edges {
                    v2c[e] = (t - c2v[e]).clamp(-LLR_CLAMP, LLR_CLAMP);
                }
            }
            bits = hard(&total);
            ok = self.syndrome_ok(&bits);
            if ok && params.early_stop {
                break;
            }
        }
        DecodeResult {
            bits,
            iterations,
            syndrome_ok: ok,
        }
    }
}

/// `out[e] = 2·atanh(∏_{e' ≠ e} tanh(in[e']/2))`, leave-one-out via prefix
/// and suffix products.
fn sum_product_check(input: &[f64], out: &mut [f64], scratch: &mut Vec<f64>) {
    let d = input.len();
    scratch.clear();
    scratch.extend(input.iter().map(|&x| (x / 2.0).tanh()));
    let mut prefix = 1.0;
    for e in 0..d {
        out[e] = prefix;
        prefix *= scratch[e];
    }
    let mut suffix = 1.0;
    for e in (0..d).rev() {
        let p = (out[e] * suffix).clamp(-0.999_999_999_999, 0.999_999_999_999);
        out[e] = 2.0 * p.atanh();
        suffix *= scratch[e];
    }
}

fn min_sum_check(input: &[f64], out: &mut [f64]) {
    let mut sign = 1.0;
    let (mut min1, mut min2, mut arg) = (f64::INFINITY, f64::INFINITY, usize::MAX);
    for (e, &x) in input.iter().enumerate() {
        if x < 0.0 {
            sign = -sign;
        }
        let a = x.abs();
        if a < min1 {
            min2 = min1;
            min1 = a;
            arg = e;
        } else if a < min2 {
            min2 = a;
        }
    }
    for (e, &x) in input.iter().enumerate() {
        let s = if x < 0.0 { -sign } else { sign };
        let m = if e == arg { min2 } else { min1 };
        out[e] = if m.is_finite() { s * m } else { 0.0 };
    }
}
