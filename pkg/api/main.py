"""
FastAPI Backend - HTTP surface over the acceptor, multipliers and oracle
"""
from fastapi import FastAPI, HTTPException, Query
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field, field_validator
from typing import Dict, List, Optional
from datetime import datetime
import sys
from pathlib import Path

sys.path.append(str(Path(__file__).parent.parent))

from src.acceptor import AcceptorBundle, get_acceptor
from src.multipliers import MultiplierBundle, get_multipliers
from src.treecalc import TreePair, ball, decode_pair, encode_pair, evaluate, reduce
from src.treecalc.pairs import canonical_generator, pair_to_conv, parse_generator_word, parse_pair_text
from src.utils.config import validate_config, API_HOST, API_PORT, MAX_RADIUS
from src.utils.exceptions import ThompsonAutomataError, ValidationError, get_error_response
from src.utils.logging_config import setup_logging, get_logger

setup_logging()
logger = get_logger(__name__)

app = FastAPI(
    title="Thompson Automata API",
    description="Caret-type normal form of Thompson's group F: acceptor, multipliers and tree pair oracle",
    version="1.0.0"
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

acceptor: Optional[AcceptorBundle] = None
multipliers: Optional[MultiplierBundle] = None
app_start_time = datetime.now()

class PairText(BaseModel):
    pair: str = Field(..., min_length=3, max_length=4096)

    @field_validator('pair')
    @classmethod
    def validate_pair(cls, v: str) -> str:
        v = v.strip()
        try:
            parse_pair_text(v)
        except ThompsonAutomataError as e:
            raise ValueError(e.message)
        return v

class DecodeRequest(PairText):
    unreduced: bool = Field(False)

class AcceptRequest(PairText):
    trace: bool = Field(False)

class MultiplyRequest(PairText):
    word: List[str] = Field(default_factory=list, max_length=256)

    @field_validator('word')
    @classmethod
    def validate_word(cls, v: List[str]) -> List[str]:
        try:
            return parse_generator_word(v)
        except ThompsonAutomataError as e:
            raise ValueError(e.message)

class CheckMultRequest(BaseModel):
    generator: str
    u: str = Field(..., min_length=3, max_length=4096)
    v: str = Field(..., min_length=3, max_length=4096)

    @field_validator('generator')
    @classmethod
    def validate_generator(cls, v: str) -> str:
        try:
            return canonical_generator(v)
        except ThompsonAutomataError as e:
            raise ValueError(e.message)

class PairResponse(BaseModel):
    pair: str

def _error(e: ThompsonAutomataError) -> HTTPException:
    status = 422 if isinstance(e, ValidationError) else 400
    return HTTPException(status_code=status, detail=get_error_response(e))

def _require_bundles():
    if acceptor is None or multipliers is None:
        raise HTTPException(status_code=503, detail="Automata not built yet")

@app.on_event("startup")
async def startup_event():
    global acceptor, multipliers
    try:
        validate_config()
        acceptor = get_acceptor()
        multipliers = get_multipliers()
        logger.info("Thompson Automata API started")
    except Exception as e:
        logger.critical(f"Failed to start: {e}")
        raise

@app.get("/")
async def root():
    return {
        "service": "Thompson Automata API",
        "version": "1.0.0",
        "status": "online",
        "timestamp": datetime.now().isoformat()
    }

@app.get("/health")
async def health_check():
    return {
        "status": "healthy" if acceptor and multipliers else "degraded",
        "acceptor_built": acceptor is not None,
        "multipliers_built": multipliers is not None,
        "uptime_seconds": (datetime.now() - app_start_time).total_seconds(),
        "timestamp": datetime.now().isoformat()
    }

@app.post("/encode", response_model=PairResponse)
async def encode(request: Dict):
    try:
        pair = TreePair.from_json(request)
    except ThompsonAutomataError as e:
        raise _error(e)
    return PairResponse(pair=pair.text())

@app.post("/decode")
async def decode(request: DecodeRequest):
    _require_bundles()
    try:
        pair = decode_pair(request.pair)
    except ThompsonAutomataError as e:
        raise _error(e)
    if not request.unreduced and not acceptor.f_machine.accepts(encode_pair(pair)):
        raise HTTPException(status_code=400, detail={
            "error": f"{request.pair} is not a normal form",
            "error_code": "NOT_NORMAL_FORM",
            "error_type": "Rejected",
        })
    return pair.to_json()

@app.post("/accept")
async def accept(request: AcceptRequest):
    _require_bundles()
    result = acceptor.f_machine.run(pair_to_conv(request.pair), trace=request.trace)
    response = {"accepted": result.accepted, "reason": result.reason}
    if request.trace:
        response["trace"] = [{"state": repr(state), "counters": list(counters)}
                             for state, counters in result.trace]
    return response

@app.post("/multiply", response_model=PairResponse)
async def multiply(request: MultiplyRequest):
    try:
        product = evaluate(request.word, reduce(decode_pair(request.pair)))
    except ThompsonAutomataError as e:
        raise _error(e)
    logger.info(f"Multiplied {request.pair} by {' '.join(request.word) or 'nothing'}")
    return PairResponse(pair=product.text())

@app.post("/check-mult")
async def check_mult(request: CheckMultRequest):
    _require_bundles()
    try:
        result = multipliers.check(request.generator, request.u, request.v)
    except ThompsonAutomataError as e:
        raise _error(e)
    return {"generator": request.generator, "accepted": result.accepted, "reason": result.reason}

@app.get("/ball")
async def get_ball(radius: int = Query(..., ge=0, le=MAX_RADIUS)):
    entries = ball(radius)
    return [{"pair": key, "length": entry.length} for key, entry in entries.items()]

if __name__ == "__main__":
    import uvicorn
    uvicorn.run("main:app", host=API_HOST, port=API_PORT, reload=True)
