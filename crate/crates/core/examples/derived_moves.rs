//! Expand derived moves into primitive sequences and check the result.
use twisted_gauss::macros::{check_expansion, minimal_host};
use twisted_gauss::{expand, MacroInstance, MacroKind, Sign};

fn main() {
    for kind in [MacroKind::Fs, MacroKind::Fo, MacroKind::Fu, MacroKind::Fv, MacroKind::F1ViaF2, MacroKind::F3ViaF4] {
        let s2 = if kind == MacroKind::Fo { Sign::Negative } else { Sign::Positive };
        let (host, site) = minimal_host(kind, Sign::Positive, s2);
        let m = MacroInstance::forward(kind, site);
        let steps = expand(&host, &m).unwrap();
        let (len, kinds) = check_expansion(&host, &m).unwrap();
        println!("{} on {host} @ {site}: {len} moves", kind.name());
        for s in &steps {
            println!("    {s}");
        }
        let names: Vec<_> = kinds.iter().map(|k| k.name()).collect();
        println!("    kinds: {}", names.join(","));
    }
}
