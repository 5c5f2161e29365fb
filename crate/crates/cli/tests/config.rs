use lrc_cli::config::*;
use proptest::prelude::*;

fn word() -> impl Strategy<Value = String> {
    prop::collection::vec(1usize..5, 0..6).prop_map(|v| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

fn command() -> impl Strategy<Value = Command> {
    prop_oneof![
        (word(), word(), prop::option::of(word()), prop::option::of(word()), any::<[bool; 3]>()).prop_map(
            |(u, v, w, iota, [equivariant, trace, count_only])| Command::Compute(ComputeArgs {
                u,
                v,
                w,
                iota,
                equivariant,
                trace,
                count_only
            })
        ),
        (0usize..5, 0usize..5).prop_map(|(a, b)| Command::Table(TableArgs { len: vec![a, b] })),
        Just(Command::Crosscheck),
        (word(), word(), prop::option::of(word()), prop::option::of("-?[0-9]{1,2}"), any::<[bool; 2]>()).prop_map(
            |(u, v, w, at, [per_word, classes])| Command::Deform(DeformArgs { u, v, w, iota: None, at, per_word, classes })
        ),
        prop_oneof![Just(AuditKind::Nonneg), Just(AuditKind::TPositivity), Just(AuditKind::Commutativity), Just(AuditKind::Root)]
            .prop_map(|kind| Command::Audit(AuditArgs { kind })),
        (word(), any::<bool>()).prop_map(|(w, classes)| Command::ReducedWords(ReducedWordsArgs { w, classes })),
        (prop::option::of("[0-9]"), prop::option::of("[0-9]")).prop_map(|(a, b)| Command::Rank2(Rank2Args { a, b })),
    ]
}

fn config() -> impl Strategy<Value = RunConfig> {
    let matrix = prop::option::of(prop_oneof![
        "[A-H][1-5]".prop_map(MatrixSource::Preset),
        "[a-z]{1,8}\\.json".prop_map(|p| MatrixSource::File(p.into())),
    ]);
    (matrix, command(), any::<bool>(), any::<bool>(), 0usize..10, 0usize..10, 1usize..1000, 0usize..8, any::<bool>()).prop_map(
        |(matrix, command, json, all, max_len, duan_cap, group_cap, threads, no_validate)| RunConfig {
            matrix,
            command,
            format: if json { Format::Json } else { Format::Text },
            filter: if all { FilterChoice::All } else { FilterChoice::Admissible },
            max_len,
            duan_cap,
            group_cap,
            threads,
            no_validate,
        },
    )
}

proptest! {
    #[test]
    fn round_trip(cfg in config()) {
        let text = cfg.to_json();
        prop_assert_eq!(RunConfig::from_json(&text).unwrap(), cfg);
    }
}

#[test]
fn defaults_fill_missing_fields() {
    let cfg = RunConfig::from_json(r#"{"command":{"name":"reduced-words","w":"1,2"}}"#).unwrap();
    let expected = RunConfig::new(None, Command::ReducedWords(ReducedWordsArgs { w: "1,2".into(), classes: false }));
    assert_eq!(cfg, expected);
}

#[test]
fn unknown_fields_are_rejected() {
    for text in [
        r#"{"command":{"name":"crosscheck"},"extra":1}"#,
        r#"{"command":{"name":"reduced-words","w":"1","colour":"red"}}"#,
        r#"{"matrix":{"preset":"A2","file":"x"},"command":{"name":"crosscheck"}}"#,
        r#"{"command":{"name":"frobnicate"}}"#,
        r#"{"command":{"name":"audit","kind":"sideways"}}"#,
    ] {
        assert!(RunConfig::from_json(text).is_err(), "{text}");
    }
}
