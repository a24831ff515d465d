import logging
from typing import List

from fastapi import FastAPI, HTTPException, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from backend.algebra.bases import transition_matrix
from backend.algebra.errors import MQSymError
from backend.api.schemas import BatchItem, CommandRequest, CommandResponse
from backend.cli.commands import Command, execute

logger = logging.getLogger(__name__)

app = FastAPI(
    title="MQSym API",
    description="Exact multi-quasisymmetric function and Rota-Baxter computations",
    version="1.0.0",
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


@app.exception_handler(MQSymError)
async def mqsym_error_handler(request: Request, exc: MQSymError):
    # raised outside a route body, e.g. by a bad MQSYM_* default
    logger.error("%s %s failed: %s", request.method, request.url.path, exc)
    return JSONResponse(status_code=400, content={"detail": str(exc)})


def _to_command(req: CommandRequest) -> Command:
    return Command(
        verb=req.verb,
        arguments=list(req.arguments),
        m=req.m,
        monoid=req.monoid,
        basis=req.basis,
        trunc=req.trunc,
        format="json",
        seed=req.seed,
        random=req.random,
    )


def _describe(req: CommandRequest) -> str:
    return " ".join([req.verb] + list(req.arguments))


@app.post("/run", response_model=CommandResponse)
def run_command(req: CommandRequest):
    try:
        result = execute(_to_command(req))
    except MQSymError as e:
        raise HTTPException(status_code=400, detail=str(e))
    logger.info("ran %s (exit %d)", _describe(req), result.exit_code)
    return {"exit_code": result.exit_code, "output": result.data}


@app.post("/batch", response_model=List[BatchItem])
def run_batch(requests: List[CommandRequest]):
    results = []
    for req in requests:
        try:
            result = execute(_to_command(req))
            results.append(
                {"command": _describe(req), "exit_code": result.exit_code, "output": result.data}
            )
        except MQSymError as e:
            logger.warning("batch item %s failed: %s", _describe(req), e)
            results.append({"command": _describe(req), "error": str(e)})
    return results


@app.get("/transition/{n}")
def get_transition(n: int, m: int = 2):
    # F -> M coefficients, one record per F row
    try:
        df = transition_matrix(n, m)
    except MQSymError as e:
        raise HTTPException(status_code=400, detail=str(e))
    records = df.reset_index().to_dict(orient="records")
    return {
        "n": n,
        "m": m,
        "compositions": list(df.columns),
        "rows": [{k: (v if isinstance(v, str) else int(v)) for k, v in r.items()} for r in records],
    }
