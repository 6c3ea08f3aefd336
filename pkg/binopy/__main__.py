from binopy.cli import main

raise SystemExit(main())
