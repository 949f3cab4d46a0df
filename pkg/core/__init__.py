# Core package: monoids, fractions, torsion witnesses, oracles, storage
