use rand::Rng;
use serde::{Deserialize, Serialize};

use super::MlpError;

/// `d → h (tanh) → 1 (identity)` perceptron.
///
/// `hidden_weights` is row-major `d × h`: the weight from input `m` to hidden
/// unit `k` is `hidden_weights[m * h + k]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MlpNetwork {
    input_dim: usize,
    hidden_units: usize,
    hidden_weights: Vec<f64>,
    hidden_bias: Vec<f64>,
    output_weights: Vec<f64>,
    output_bias: f64,
}

/// Derivatives of the network output with respect to each parameter, laid out
/// like the network itself.
#[derive(Debug, Clone, PartialEq)]
pub struct Gradients {
    pub hidden_weights: Vec<f64>,
    pub hidden_bias: Vec<f64>,
    pub output_weights: Vec<f64>,
    pub output_bias: f64,
}

impl Gradients {
    pub fn zeros(input_dim: usize, hidden_units: usize) -> Self {
        Self {
            hidden_weights: vec![0.0; input_dim * hidden_units],
            hidden_bias: vec![0.0; hidden_units],
            output_weights: vec![0.0; hidden_units],
            output_bias: 0.0,
        }
    }

    /// Flattened in the order of [`MlpNetwork::parameters`].
    pub fn to_vec(&self) -> Vec<f64> {
        let mut v = Vec::with_capacity(self.hidden_weights.len() + 2 * self.hidden_bias.len() + 1);
        v.extend(&self.hidden_weights);
        v.extend(&self.hidden_bias);
        v.extend(&self.output_weights);
        v.push(self.output_bias);
        v
    }

    pub(crate) fn add_scaled(&mut self, other: &Gradients, scale: f64) {
        let pairs = self
            .hidden_weights
            .iter_mut()
            .zip(&other.hidden_weights)
            .chain(self.hidden_bias.iter_mut().zip(&other.hidden_bias))
            .chain(self.output_weights.iter_mut().zip(&other.output_weights));
        for (a, b) in pairs {
            *a += scale * b;
        }
        self.output_bias += scale * other.output_bias;
    }
}

impl MlpNetwork {
    pub fn zeros(input_dim: usize, hidden_units: usize) -> Self {
        Self {
            input_dim,
            hidden_units,
            hidden_weights: vec![0.0; input_dim * hidden_units],
            hidden_bias: vec![0.0; hidden_units],
            output_weights: vec![0.0; hidden_units],
            output_bias: 0.0,
        }
    }

    /// Every parameter drawn uniformly from `[-scale, scale]`.
    pub fn init_uniform<R: Rng + ?Sized>(input_dim: usize, hidden_units: usize, scale: f64, rng: &mut R) -> Self {
        let mut net = Self::zeros(input_dim, hidden_units);
        let mut draw = || if scale > 0.0 { rng.gen_range(-scale..=scale) } else { 0.0 };
        for w in net.hidden_weights.iter_mut().chain(&mut net.hidden_bias).chain(&mut net.output_weights) {
            *w = draw();
        }
        net.output_bias = draw();
        net
    }

    pub fn from_parts(
        input_dim: usize,
        hidden_units: usize,
        hidden_weights: Vec<f64>,
        hidden_bias: Vec<f64>,
        output_weights: Vec<f64>,
        output_bias: f64,
    ) -> Result<Self, MlpError> {
        let check = |expected: usize, found: usize| {
            if expected == found {
                Ok(())
            } else {
                Err(MlpError::DimensionMismatch { expected, found })
            }
        };
        check(input_dim * hidden_units, hidden_weights.len())?;
        check(hidden_units, hidden_bias.len())?;
        check(hidden_units, output_weights.len())?;
        let net = Self { input_dim, hidden_units, hidden_weights, hidden_bias, output_weights, output_bias };
        if !net.parameters().iter().all(|p| p.is_finite()) {
            return Err(MlpError::Document("non-finite parameter".into()));
        }
        Ok(net)
    }

    pub fn input_dim(&self) -> usize {
        self.input_dim
    }

    pub fn hidden_units(&self) -> usize {
        self.hidden_units
    }

    pub fn hidden_weights(&self) -> &[f64] {
        &self.hidden_weights
    }

    pub fn hidden_bias(&self) -> &[f64] {
        &self.hidden_bias
    }

    pub fn output_weights(&self) -> &[f64] {
        &self.output_weights
    }

    pub fn output_bias(&self) -> f64 {
        self.output_bias
    }

    pub fn num_parameters(&self) -> usize {
        self.hidden_weights.len() + 2 * self.hidden_units + 1
    }

    /// Hidden weights, hidden biases, output weights, output bias.
    pub fn parameters(&self) -> Vec<f64> {
        let mut v = Vec::with_capacity(self.num_parameters());
        v.extend(&self.hidden_weights);
        v.extend(&self.hidden_bias);
        v.extend(&self.output_weights);
        v.push(self.output_bias);
        v
    }

    pub fn set_parameters(&mut self, params: &[f64]) -> Result<(), MlpError> {
        if params.len() != self.num_parameters() {
            return Err(MlpError::DimensionMismatch { expected: self.num_parameters(), found: params.len() });
        }
        let (hw, rest) = params.split_at(self.hidden_weights.len());
        let (hb, rest) = rest.split_at(self.hidden_units);
        let (ow, ob) = rest.split_at(self.hidden_units);
        self.hidden_weights.copy_from_slice(hw);
        self.hidden_bias.copy_from_slice(hb);
        self.output_weights.copy_from_slice(ow);
        self.output_bias = ob[0];
        Ok(())
    }

    fn check_input(&self, input: &[f64]) -> Result<(), MlpError> {
        if input.len() == self.input_dim {
            Ok(())
        } else {
            Err(MlpError::DimensionMismatch { expected: self.input_dim, found: input.len() })
        }
    }

    /// Hidden activations `tanh(b_k + Σ_m w_mk x_m)`.
    pub fn hidden_activations(&self, input: &[f64]) -> Result<Vec<f64>, MlpError> {
        self.check_input(input)?;
        Ok(self.hidden_unchecked(input))
    }

    fn hidden_unchecked(&self, input: &[f64]) -> Vec<f64> {
        let h = self.hidden_units;
        let mut z = self.hidden_bias.clone();
        for (m, &x) in input.iter().enumerate() {
            if x == 0.0 {
                continue;
            }
            for (zk, &w) in z.iter_mut().zip(&self.hidden_weights[m * h..(m + 1) * h]) {
                *zk += w * x;
            }
        }
        z.iter_mut().for_each(|v| *v = v.tanh());
        z
    }

    fn output_from_hidden(&self, hidden: &[f64]) -> f64 {
        self.output_bias + hidden.iter().zip(&self.output_weights).map(|(a, v)| a * v).sum::<f64>()
    }

    pub fn forward(&self, input: &[f64]) -> Result<f64, MlpError> {
        self.check_input(input)?;
        Ok(self.output_from_hidden(&self.hidden_unchecked(input)))
    }

    /// Output and its gradient with respect to every parameter.
    pub fn backward(&self, input: &[f64]) -> Result<(f64, Gradients), MlpError> {
        self.check_input(input)?;
        let h = self.hidden_units;
        let hidden = self.hidden_unchecked(input);
        let out = self.output_from_hidden(&hidden);

        let mut g = Gradients::zeros(self.input_dim, h);
        g.output_bias = 1.0;
        g.output_weights.copy_from_slice(&hidden);
        for ((gb, &v), &a) in g.hidden_bias.iter_mut().zip(&self.output_weights).zip(&hidden) {
            *gb = v * (1.0 - a * a);
        }
        for (m, &x) in input.iter().enumerate() {
            for (gw, &delta) in g.hidden_weights[m * h..(m + 1) * h].iter_mut().zip(&g.hidden_bias) {
                *gw = delta * x;
            }
        }
        Ok((out, g))
    }

    /// `∂output / ∂input_m` for each input column.
    pub fn input_gradient(&self, input: &[f64]) -> Result<Vec<f64>, MlpError> {
        self.check_input(input)?;
        let h = self.hidden_units;
        let hidden = self.hidden_unchecked(input);
        let delta: Vec<f64> = (0..h).map(|k| self.output_weights[k] * (1.0 - hidden[k] * hidden[k])).collect();
        Ok((0..self.input_dim)
            .map(|m| self.hidden_weights[m * h..(m + 1) * h].iter().zip(&delta).map(|(w, d)| w * d).sum())
            .collect())
    }

    pub(crate) fn step(&mut self, grad: &Gradients, learning_rate: f64) {
        let pairs = self
            .hidden_weights
            .iter_mut()
            .zip(&grad.hidden_weights)
            .chain(self.hidden_bias.iter_mut().zip(&grad.hidden_bias))
            .chain(self.output_weights.iter_mut().zip(&grad.output_weights));
        for (p, g) in pairs {
            *p -= learning_rate * g;
        }
        self.output_bias -= learning_rate * grad.output_bias;
    }
}

/// Free-function form of [`MlpNetwork::forward`].
pub fn forward(net: &MlpNetwork, input: &[f64]) -> Result<f64, MlpError> {
    net.forward(input)
}
