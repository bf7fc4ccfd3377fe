//! Witness files shipped in the repository's `data/` directory.

pub const BUNDLED: [(&str, &str); 8] = [
    ("roos", include_str!("../../../../data/roos.json")),
    ("conca", include_str!("../../../../data/conca.json")),
    ("s36", include_str!("../../../../data/s36.json")),
    ("s45", include_str!("../../../../data/s45.json")),
    ("v72", include_str!("../../../../data/v72.json")),
    ("v53", include_str!("../../../../data/v53.json")),
    ("v54", include_str!("../../../../data/v54.json")),
    ("v45", include_str!("../../../../data/v45.json")),
];

pub fn bundled_witness(name: &str) -> Option<&'static str> {
    BUNDLED.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}
