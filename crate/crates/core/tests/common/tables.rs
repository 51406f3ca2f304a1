//! Published tables of the nine-city worked example, transcribed as printed
//! (decimal commas converted). Rows are criteria C1..C9, columns cities A1..A9.

pub const VALUES: [[&str; 9]; 9] = [
    ["2", "7", "1", "9", "2", "7", "6", "4", "9"],
    ["0", "0", "0", "2", "1", "1", "5", "0", "0"],
    ["0", "0", "0", "1", "0", "0", "0", "0", "0"],
    ["2", "1", "1", "1", "2", "1", "1", "3", "1"],
    ["0.45", "0.55", "0.64", "0.60", "0.65", "0.52", "0.58", "0.53", "0.60"],
    ["0.42", "0.47", "0.41", "0.62", "0.51", "0.47", "0.48", "0.62", "0.52"],
    ["0.35", "0.80", "0.58", "0.54", "0.54", "0.88", "0.63", "0.39", "0.66"],
    ["383", "11246", "216", "1335", "142", "22665", "796", "302", "1249"],
    ["14", "13", "14", "10", "15", "14", "13", "12", "13"],
];

pub const MAXIMIZE: [bool; 9] = [true, true, false, true, true, true, true, true, true];

pub const WEIGHTS: [&str; 9] = ["0.013", "0.016", "0.018", "0.043", "0.048", "0.096", "0.007", "0.750", "0.009"];

pub const SPC: [[f64; 9]; 9] = [
    [7.0, 2.0, 8.0, 0.0, 7.0, 2.0, 3.0, 5.0, 0.0],
    [5.0, 5.0, 5.0, 3.0, 4.0, 4.0, 0.0, 5.0, 5.0],
    [0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [1.0, 2.0, 2.0, 2.0, 1.0, 2.0, 2.0, 0.0, 2.0],
    [0.20, 0.10, 0.01, 0.05, 0.00, 0.14, 0.07, 0.12, 0.05],
    [0.20, 0.16, 0.21, 0.00, 0.11, 0.15, 0.15, 0.00, 0.10],
    [0.53, 0.08, 0.30, 0.34, 0.34, 0.00, 0.25, 0.48, 0.22],
    [22282.0, 11419.0, 22449.0, 21330.0, 22523.0, 0.0, 21869.0, 22363.0, 21416.0],
    [1.0, 2.0, 1.0, 5.0, 0.0, 1.0, 2.0, 3.0, 2.0],
];

pub const LC: [[f64; 9]; 9] = [
    [0.46, 0.72, 0.43, 1.44, 0.46, 0.72, 0.62, 0.51, 1.44],
    [0.51, 0.51, 0.51, 0.62, 0.56, 0.56, 1.44, 0.51, 0.51],
    [1.44, 1.44, 1.44, 0.91, 1.44, 1.44, 1.44, 1.44, 1.44],
    [0.91, 0.72, 0.72, 0.72, 0.91, 0.72, 0.72, 1.44, 0.72],
    [1.26, 1.35, 1.43, 1.40, 1.44, 1.32, 1.37, 1.33, 1.39],
    [1.27, 1.30, 1.26, 1.44, 1.34, 1.31, 1.31, 1.44, 1.35],
    [1.08, 1.36, 1.20, 1.18, 1.18, 1.44, 1.23, 1.10, 1.25],
    [0.10, 0.11, 0.10, 0.10, 0.10, 1.44, 0.10, 0.10, 0.10],
    [0.91, 0.72, 0.91, 0.51, 1.44, 0.91, 0.72, 0.62, 0.72],
];

pub const WLC: [[f64; 9]; 9] = [
    [0.006, 0.010, 0.006, 0.019, 0.006, 0.010, 0.008, 0.007, 0.019],
    [0.008, 0.008, 0.008, 0.010, 0.009, 0.009, 0.024, 0.008, 0.008],
    [0.026, 0.026, 0.026, 0.016, 0.026, 0.026, 0.026, 0.026, 0.026],
    [0.039, 0.031, 0.031, 0.031, 0.039, 0.031, 0.031, 0.062, 0.031],
    [0.060, 0.064, 0.068, 0.066, 0.069, 0.063, 0.065, 0.063, 0.066],
    [0.122, 0.125, 0.121, 0.139, 0.129, 0.126, 0.126, 0.139, 0.130],
    [0.007, 0.009, 0.008, 0.008, 0.008, 0.009, 0.008, 0.007, 0.008],
    [0.075, 0.080, 0.075, 0.075, 0.075, 1.082, 0.075, 0.075, 0.075],
    [0.008, 0.006, 0.008, 0.004, 0.013, 0.008, 0.006, 0.005, 0.006],
];

pub const BETA: [f64; 9] = [0.019, 0.024, 0.026, 0.062, 0.069, 0.139, 0.009, 1.082, 0.013];
pub const BETA_SUM: f64 = 1.443;

pub const ALPHA: [f64; 9] = [0.352, 0.360, 0.351, 0.370, 0.373, 1.364, 0.370, 0.393, 0.371];
pub const THETA: [f64; 9] = [0.244, 0.249, 0.244, 0.256, 0.258, 0.945, 0.256, 0.272, 0.257];
pub const RANK: [usize; 9] = [8, 7, 9, 6, 3, 1, 5, 2, 4];

/// Cities best first, as 1-based column numbers.
pub const ORDER: [usize; 9] = [6, 8, 5, 9, 7, 4, 2, 1, 3];

pub const CITY_NAMES: [&str; 9] = ["Adana", "Ankara", "Antalya", "Bursa", "Denizli", "Istanbul", "Kocaeli", "Manisa", "Izmir"];

pub fn rows<const N: usize>(t: &[[f64; N]]) -> Vec<Vec<f64>> {
    t.iter().map(|r| r.to_vec()).collect()
}
