// Fuzz target bodies, shared by the cargo-fuzz binaries and the corpus
// replay test in the main workspace. Each one must return normally on any
// input; a panic is a bug.

use crystalkit::{Bicrystal, Crystal, Document, Multisegment, Partition, Rank};

pub fn document_json(data: &[u8]) {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(doc) = Document::from_json(text) {
        let printed = doc.to_json();
        assert_eq!(Document::from_json(&printed).expect("printed documents parse"), doc);
        let _ = doc.label();
    }
}

/// First byte picks the rank, the rest is the label text.
pub fn multisegment_label(data: &[u8]) {
    let Some((&r, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    let rank = Rank::new(u32::from(r % 8) + 1).expect("nonzero");
    if let Ok(m) = Multisegment::parse_label(rank, text) {
        assert_eq!(Multisegment::parse_label(rank, &m.label()), Ok(m));
    }
}

pub fn partition_spec(data: &[u8]) {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = text.parse::<Partition>() {
        let spec: Vec<String> = p.parts().iter().map(u32::to_string).collect();
        assert_eq!(spec.join(",").parse::<Partition>(), Ok(p));
    }
}

const MAX_SIZE: u64 = 256;

/// A JSON document, a newline, then one byte per operator application.
pub fn apply_ops(data: &[u8]) {
    let split = data.iter().position(|&b| b == b'\n').unwrap_or(data.len());
    let Ok(text) = std::str::from_utf8(&data[..split]) else { return };
    let Ok(mut doc) = Document::from_json(text) else { return };
    for &b in data.get(split + 1..).unwrap_or(&[]) {
        let n = doc.rank().as_usize();
        let i = usize::from(b / 8) % n + 1;
        let next = match &doc {
            Document::Ms(m) if m.size() <= MAX_SIZE => match b % 8 {
                0 => m.e(i).map(Document::Ms),
                1 => {
                    let f = m.f(i);
                    assert_eq!(f.e(i).as_ref(), Some(m));
                    Some(Document::Ms(f))
                }
                2 => m.e_star(i).map(Document::Ms),
                3 => {
                    let f = m.f_star(i);
                    assert_eq!(f.e_star(i).as_ref(), Some(m));
                    Some(Document::Ms(f))
                }
                4 => Some(Document::Ms(m.sigma_checked(i).expect("σ_i does not depend on L >= jump"))),
                5 => Some(Document::Ms(m.flip())),
                6 => Some(Document::Ms(m.sigma_chain())),
                _ => Some(Document::Pbw(crystalkit::pbw::phi_inv(m))),
            },
            Document::Tab(t) if t.depth() <= MAX_SIZE => match b % 3 {
                0 => t.checked_e(i).expect("semistandard").map(Document::Tab),
                1 => t.checked_f(i).expect("semistandard").map(Document::Tab),
                _ => Some(Document::Ms(t.embed())),
            },
            Document::Pbw(a) if a.size() <= MAX_SIZE => match b % 5 {
                0 => a.e(i).map(Document::Pbw),
                1 => a.f(i).map(Document::Pbw),
                2 => a.e_star(i).map(Document::Pbw),
                3 => a.f_star(i).map(Document::Pbw),
                _ => Some(Document::Ms(crystalkit::pbw::phi(a))),
            },
            _ => None,
        };
        match next {
            Some(d) => doc = d,
            None => return,
        }
    }
}
