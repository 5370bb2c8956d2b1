# Spreading a file over 7 storage nodes.  Any 5 nodes rebuild it; any 3 learn nothing.
#
# Run:  python3 demos/05_distributed_storage.py

import itertools
import os
import tempfile
from pathlib import Path

from eewt import reference_scheme
from eewt.storage import adversary_view, read_share, reconstruct, split, write_shares

scheme = reference_scheme()
data = os.urandom(4096)
shares = split(scheme, data, seed=2024)

with tempfile.TemporaryDirectory() as tmp:
    paths = write_shares(shares, Path(tmp) / "backup")
    print(read_share(paths[0]).describe())
    print("share size:", paths[0].stat().st_size, "bytes for a", len(data), "byte file")

    loaded = [read_share(p) for p in paths]
    ok = all(reconstruct(scheme, [loaded[i] for i in m]) == data for m in itertools.combinations(range(7), 5))
    print("every 5-node subset reconstructs:", ok)

    print(adversary_view(scheme, loaded[:3]).to_text())
    print(adversary_view(scheme, loaded[:4]).to_text())
