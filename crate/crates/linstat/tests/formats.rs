use linstat::formats::{fmt_f64, EigenBatch, Table};
use linstat_core::ensemble::sample;
use linstat_core::EnsembleSpec;

fn batch() -> EigenBatch {
    let spec = EnsembleSpec::jue(5, 0.5, -0.25);
    EigenBatch { spec, seed: 42, draws: (0..20).map(|i| sample(&spec, 42, i).unwrap().eigenvalues).collect() }
}

#[test]
fn floats_round_trip_exactly() {
    for v in [0.1, -1.0 / 3.0, 1e-300, 6.02e23, f64::MIN_POSITIVE, -0.0, 12345.678901234567] {
        assert_eq!(fmt_f64(v).parse::<f64>().unwrap().to_bits(), v.to_bits());
    }
}

#[test]
fn csv_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("e.csv");
    let b = batch();
    b.to_table("tridiagonal").write(&p).unwrap();
    let text = std::fs::read_to_string(&p).unwrap();
    assert!(text.lines().take(9).all(|l| l.starts_with('#')));
    let t = Table::read(&p).unwrap();
    assert_eq!(t.columns.len(), 5);
    assert_eq!(t.get_provenance("method"), Some("tridiagonal"));
    assert_eq!(EigenBatch::from_table(&t).unwrap(), b);
}

#[test]
fn binary_round_trip_and_layout() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("e.bin");
    let b = batch();
    b.write_binary(&p).unwrap();
    let bytes = std::fs::read(&p).unwrap();
    assert_eq!(bytes.len(), 64 + 8 * 5 * 20);
    assert_eq!(&bytes[..8], b"LSTEIG01");
    assert_eq!(bytes[8], 2);
    assert_eq!(f64::from_le_bytes(bytes[64..72].try_into().unwrap()), b.draws[0][0]);
    assert_eq!(EigenBatch::read_binary(&p).unwrap(), b);
}

#[test]
fn corrupt_binary_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("e.bin");
    batch().write_binary(&p).unwrap();
    let mut bytes = std::fs::read(&p).unwrap();
    bytes.pop();
    std::fs::write(&p, &bytes).unwrap();
    assert!(EigenBatch::read_binary(&p).is_err());
    bytes[0] = b'X';
    std::fs::write(&p, &bytes).unwrap();
    assert!(EigenBatch::read_binary(&p).is_err());
}

#[test]
fn table_without_column_line_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("t.csv");
    std::fs::write(&p, "1,2\n").unwrap();
    assert!(Table::read(&p).is_err());
}
