use aploco::decision::Matrix;
use aploco::mlp::synthetic::linear_dataset;
use aploco::mlp::{
    encode, importance, partition, relative_error, sum_squared_error, train, EncodedDataset, MlpError, MlpNetwork,
    Partition, PredictorBlock, PredictorKind, TrainConfig,
};

fn linear(seed: u64) -> EncodedDataset {
    let (schema, records) = linear_dataset(200, &[0.8, -0.5, 0.3], 0.01, seed);
    partition(encode(&records, &schema).unwrap(), 0.71, seed).unwrap()
}

#[test]
fn training_loss_decreases_over_first_steps() {
    let data = linear(1);
    let mut previous = f64::INFINITY;
    for epochs in 0..=10 {
        let config = TrainConfig { epochs, learning_rate: 0.05, seed: 4, ..TrainConfig::default() };
        let (_, report) = train(&data, &config).unwrap();
        assert!(report.train_sse < previous, "epoch {epochs}: {} !< {previous}", report.train_sse);
        previous = report.train_sse;
    }
}

#[test]
fn zero_epochs_leaves_initial_network() {
    let data = linear(2);
    let config = TrainConfig { epochs: 0, seed: 9, ..TrainConfig::default() };
    let (net, _) = train(&data, &config).unwrap();
    assert_eq!(net, config.initial_network(data.input_width()));
}

#[test]
fn same_seed_gives_identical_network() {
    let config = TrainConfig { epochs: 200, seed: 13, ..TrainConfig::default() };
    let (a, ra) = train(&linear(3), &config).unwrap();
    let (b, rb) = train(&linear(3), &config).unwrap();
    assert_eq!(a.parameters(), b.parameters());
    assert_eq!(ra, rb);
    let (c, _) = train(&linear(3), &TrainConfig { seed: 14, ..config }).unwrap();
    assert_ne!(a.parameters(), c.parameters());
}

#[test]
fn linear_target_is_learned_within_ten_percent() {
    let config = TrainConfig { epochs: 2000, learning_rate: 0.1, seed: 0, ..TrainConfig::default() };
    let data = linear(5);
    let (net, report) = train(&data, &config).unwrap();
    let train_rel = report.train_relative_error.unwrap();
    assert!(train_rel < 0.10, "train relative error {train_rel}");
    assert!(relative_error(&net, &data, Partition::Test).unwrap() < 0.10);
    assert_eq!(report.rng, aploco::mlp::RNG_ALGORITHM);
}

#[test]
fn huge_learning_rate_reports_divergence() {
    let config = TrainConfig { epochs: 500, learning_rate: 1e6, ..TrainConfig::default() };
    match train(&linear(6), &config) {
        Err(MlpError::NonFiniteLoss { .. }) => {}
        other => panic!("expected divergence, got {other:?}"),
    }
}

fn tiny_dataset(targets: Vec<f64>) -> EncodedDataset {
    let n = targets.len();
    let inputs = Matrix::from_row_major(n, 1, (0..n).map(|i| i as f64 / n as f64).collect()).unwrap();
    let blocks = vec![PredictorBlock { name: "x".into(), kind: PredictorKind::Covariate, columns: 0..1 }];
    EncodedDataset::from_parts(inputs, targets, blocks).unwrap()
}

#[test]
fn relative_error_is_zero_for_exact_fit_and_one_for_mean() {
    let net = MlpNetwork::from_parts(1, 2, vec![0.7, -0.4], vec![0.1, 0.2], vec![1.5, -0.5], 0.25).unwrap();
    let inputs: Vec<f64> = (0..8).map(|i| i as f64 / 8.0).collect();
    let targets = inputs.iter().map(|&x| net.forward(&[x]).unwrap()).collect();
    let exact = tiny_dataset(targets).with_uniform_partition(Partition::Train);
    assert_eq!(relative_error(&net, &exact, Partition::Train).unwrap(), 0.0);
    assert_eq!(sum_squared_error(&net, &exact, Partition::Train).unwrap(), 0.0);

    let targets = vec![1.0, 4.0, -2.0, 0.5, 3.0, 7.0, -1.0, 2.5];
    let mean = targets.iter().sum::<f64>() / targets.len() as f64;
    let constant = MlpNetwork::from_parts(1, 2, vec![0.0, 0.0], vec![0.0, 0.0], vec![0.0, 0.0], mean).unwrap();
    let data = tiny_dataset(targets).with_uniform_partition(Partition::Train);
    let rel = relative_error(&constant, &data, Partition::Train).unwrap();
    assert!((rel - 1.0).abs() <= 1e-12, "{rel}");
}

#[test]
fn relative_error_on_constant_targets_is_an_error() {
    let data = tiny_dataset(vec![2.0; 4]).with_uniform_partition(Partition::Train);
    let net = MlpNetwork::zeros(1, 1);
    assert!(matches!(relative_error(&net, &data, Partition::Train), Err(MlpError::ZeroVariance { .. })));
}

#[test]
fn informative_predictor_dominates_null_predictor() {
    for seed in 0..5 {
        let (schema, records) = linear_dataset(200, &[3.0, 0.0], 0.01, 100 + seed);
        let data = partition(encode(&records, &schema).unwrap(), 0.71, seed).unwrap();
        let config = TrainConfig { epochs: 500, learning_rate: 0.1, seed, ..TrainConfig::default() };
        let (net, _) = train(&data, &config).unwrap();
        let report = importance(&net, &data).unwrap();
        let (x1, x2) = (report.get("x1").unwrap(), report.get("x2").unwrap());
        assert!(x1.importance > x2.importance, "seed {seed}: {} vs {}", x1.importance, x2.importance);
        assert_eq!(x1.rank, 1);
        assert!((report.values().iter().sum::<f64>() - 1.0).abs() <= 1e-9);
        assert!(report.values().iter().all(|&v| v >= 0.0));
    }
}
