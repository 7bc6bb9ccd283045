from curvecensus.main import main

raise SystemExit(main())
