"""Allow `python -m rzs` as an alias for the `rzs` console script."""

from .cli import main

raise SystemExit(main())
