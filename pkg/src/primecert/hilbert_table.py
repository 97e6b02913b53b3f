"""Integer ring class polynomial table, monic, coefficients in
descending degree order.  Generated once from the reduced-form
enumeration of each discriminant; validated against brute-force
curve orders in the test suite.  Nothing here is trusted by the
verifier: a wrong entry could only make the prover fail to find
a curve.
"""

CLASS_POLYNOMIALS = {
    -3: (1, 0),
    -4: (1, -1728),
    -7: (1, 3375),
    -8: (1, -8000),
    -11: (1, 32768),
    -12: (1, -54000),
    -15: (1, 191025, -121287375),
    -16: (1, -287496),
    -19: (1, 884736),
    -20: (1, -1264000, -681472000),
    -23: (1, 3491750, -5151296875, 12771880859375),
    -24: (1, -4834944, 14670139392),
    -27: (1, 12288000),
    -28: (1, -16581375),
    -31: (1, 39491307, -58682638134, 1566028350940383),
    -32: (1, -52250000, 12167000000),
    -35: (1, 117964800, -134217728000),
    -36: (1, -153542016, -1790957481984),
    -39: (1, 331531596, -429878960946, 109873509788637459, 20919104368024767633),
    -40: (1, -425692800, 9103145472000),
    -43: (1, 884736000),
    -44: (1, -1122662608, 270413882112, -653249011576832),
    -47: (1, 2257834125, -9987963828125, 5115161850595703125, -14982472850828613281250, 16042929600623870849609375),
    -48: (1, -2835810000, 6549518250000),
    -51: (1, 5541101568, 6262062317568),
    -52: (1, -6896880000, -567663552000000),
    -55: (1, 13136684625, -20948398473375, 172576736359017890625, -18577989025032784359375),
    -56: (1, -16220384512, 2059647197077504, 2257767342088912896, 10064086044321563803648),
    -59: (1, 30197678080, -140811576541184, 374643194001883136),
    -60: (1, -37018076625, 153173312762625),
    -63: (1, 67515199875, -193068841781250, 4558451243295023437500, -6256903954262253662109375),
    -64: (1, -82226316240, -7367066619912),
    -67: (1, 147197952000),
    -68: (1, -178211040000, -75843692160000000, -318507038720000000000, -2089297506304000000000000),
    -71: (1, 313645809715, -3091990138604570, 98394038810047812049302, -823534263439730779968091389, 5138800366453976780323726329446, -425319473946139603274605151187659, 737707086760731113357714241006081263),
    -72: (1, -377674768000, 232381513792000000),
    -75: (1, 654403829760, 5209253090426880),
    -76: (1, -784074438864, 1128678666363648, -827237892283232256),
    -79: (1, 1339190283240, -6366718450945836, 1793441424178093483069839, -5859423003994491322155950334, 5458041030919737322344464663391),
    -80: (1, -1597177172000, -13028555239824000, -171263969177632000000, 422286883970526784000000),
    -83: (1, 2691907584000, -41490055168000000, 549755813888000000000),
    -84: (1, -3196800946944, -5663679223085309952, 88821246589810089394176, -5133201653210986057826304),
    -87: (1, 5321761711875, 85585228375218750, 28321090578679361484375000, 497577733884372638735595703125, 432181202257616392838287353515625, 549806430204864490157810211181640625),
    -88: (1, -6294842640000, 15798135578688000000),
    -91: (1, 10359073013760, -3845689020776448),
    -92: (1, -12207823849750, -263033266852296875, -6267542200571287109375),
    -95: (1, 19874477919500, -688170786018119250, 395013575867144519258203125, -13089776536501963407329479984375, 352163322858664726762725228294921875, -1437415939871573574572839010971248046875, 2110631639116675267953915424764056884765625, 107789694576540010002976771996177148681640625),
    -96: (1, -23340144296736, 670421055192156288, 447805364111967209472, -984163224549635621646336),
    -99: (1, 37616060956672, -56171326053810176),
    -100: (1, -44031499226496, -292143758886942437376),
    -103: (1, 70292286280125, 85475283659296875, 4941005649165514137656250000, 13355527720114165506172119140625, 28826612937014029067466156005859375),
    -104: (1, -82028232174464, 739545196164376195072, 31013571054009020830449664, 1378339984770204584193868955648, -25735039642229334200564710375424, 65437179730333545242323676123103232),
    -107: (1, 129783279616000, -6764523159552000000, 337618789203968000000000),
    -108: (1, -151013228706000, 224179462188000000, -1879994705688000000000),
    -111: (1, 236917342626795, 12257744369763349962, 56129700127461627298044206619, 2987537813865962860773420720531252, -25675269514993965918445147228203062874, 88953282358528708595648019437144660946708, -64773995403104720702864091375403035855442761, 27524793815819191410861831167197250556510894417),
    -112: (1, -274917323970000, 1337635747140890625),
    -115: (1, 427864611225600, 130231327260672000),
    -116: (1, -495202728828032, -11056847669496432594944, -835102260960042427461140480, -66527716583835083670963399688192, 143376986667050616958401264069115904, -100730316193548175256338136121783353344),
    -120: (1, -883067971104000, 26329406807264910336000, -2588458316335175909376000000, 4934510722321469030006784000000),
    -123: (1, 1354146840576000, 148809594175488000000),
    -124: (1, -1559739536377947, -874125972104525910, -599530686551745232383),
    -127: (1, 2375421230598750, -30614197896114609375, 5642626198092219066070054687500, -64331030949386896516600669921875000, 319730671478833667491273673675537109375),
    -128: (1, -2729960418308000, -395258439243352250000, -55499520947716391500000000, -345363656226658026765625000000),
    -131: (1, 4130485792112640, -671177121829224448000, 107205484283838454093053952, -60354680538951673475558801408, 144530638394690224075155326369792),
    -132: (1, -4736863498464000, -325211610485778048000000, 54984539729717250048000000000, 1656636925108948992000000000000),
    -135: (1, 7122306993287625, 77686119211324699125, 50727257383070661992492657625000, 628735820731639650833126829398718750, 4321223868213674595045534006061857421875, 3284527439242119311242957750346113869140625),
    -136: (1, -8151279336430848, 735960027609078992953344, -1834607111282472051029311488, 2422829169428572504087521656832),
    -139: (1, 12183160834031616, -53041786755137667072, 67408489017571610198016),
    -140: (1, -13916138006442400, -3270237719203124384000, -790870172407252503705600000, 2848295663082788926282752000000, -96864973869318094511286681600000000, 242830180406000275493501698048000000000),
    -144: (1, -23578503968570400, 269499185406087942528, 490453856866850787293184, 571751321233328637579104256),
    -147: (1, 34848505552896000, 11356800389480448000000),
    -148: (1, -39660183801072000, -7898242515936467904000000),
    -151: (1, 58309232586862950, 1107018219296858557941, 3399966616467533664248409155353722, 69605133153244389737334180535377491802, 779394774943277357155375818745718823538863, 271248134304567044479896903675912851345002767, 3269200340379000902458720113257045278788199227087),
    -152: (1, -66246265919280000, 17024071380555203520000000, 6854544294799483688960000000000, 2783058624787093614292992000000000000, -1380504171426125758791680000000000000000, 472390748138731280269312000000000000000000),
    -155: (1, 96905542950912000, -44477871096357453824000, 20396251654725321097216000000, 37425860028464856284790784000000),
    -156: (1, -109914552886955148, 53074935443801207676942, -164993592496972989327022035, 421266000645144840703921125633),
    -160: (1, -181195519824640800, -2940735389875294896000, 13208221536779701382400000, -293835053960432980416000000),
    -163: (1, 262537412640768000),
    -164: (1, -296853791160440320, -161936389233870440957755392, -107971538556531472065498397540352, -72018009354152588972347870534871023616, -82923859178811827895415538602091992842240, 58876580988711431943771690012552346623541248, 716292304882512928715138362472485709784740265984, -852636173252919999445568788749874942641540406706176),
    -168: (1, -483435712076832000, 336511679671210230144000000, -264691184105480095991808000000000, 496644064976895846912000000000000000),
    -171: (1, 694282057876537344, 472103267541360574464, 8391550371275812148084736, -1311901521779155773721411584),
    -172: (1, -782759106183330000, 1164707517403692000000, -692660810326239000000000000),
    -175: (1, 1119444674983992405, -54813228576976021387185, 1253156381651642217978286627708618800, -59496933313401566319649813402788210673425, 1368302291061523680379707879639549158890532250, 27017288450887144631231387755756779460197062625),
    -176: (1, -1260369120052221040, -1311227225704547834164432, -1417657940638726253547455241728, 56139914410303801525997336800408320, -233832181396031563359165936367916838912, 984315149136933710414929915123613725364224),
    -179: (1, 1795194552944492544, -2200273236852299356176384, 2672564790656716736213209317376, -23408814596997033103434472837087232, 69366107283027836458026686806432415744),
    -180: (1, -2018504138609120000, -2867757758882006477169664000, 16660473763558887652278272000000, -6776421923145961044033929216000000),
    -183: (1, 2863790268422945625, 4218620940804013154578125, 8201294924243209292049624110812500000, 12093440927683360441327407340610611816406250, 655855629401644394905657823337825299835205078125, 18238748993199475597203528068101439981700897216796875, -26922618461790759850037872887492462842807292938232421875, 30451733341148937584624248315225887141980230808258056640625),
    -184: (1, -3215890895076912384, 5767007465145198439020847104, 38705419208160503264676104110080, 114574710497270997578522590458150912),
    -187: (1, 4545336381788160000, -3845689020776448000000),
    -188: (1, -5097838276115828125, -8766069746614632866828125, -15093437571402131169817626953125, 51644103814690479844366699218750, -124343484762728525316005706787109375),
    -192: (1, -8041801037378436000, 15705521635909735050750000, 826335556188178615474500000000, -1080060886113159937649308593750000),
    -195: (1, 11284411506057216000, 25349140792043819237376000, 104773100319600336175104000000, -233490285492432753672585216000000),
    -196: (1, -12626092121367165696, -44864481851299856707307347968, 250850701957837760512539510177792, -2108010653658430719613224868701536256),
    -200: (1, -19733105507276110720, 87605036675549431339528253440, 236628493411489493484987107953868800, 640004261883602853633325553571308188467200, 181651879545544879923314552485535205556224000, 1139359927820736630329093876556526883461660672000),
    -203: (1, 27502410406723584000, -83053272156952592384000000, 250634002097696556449792000000000, 31913605837856413057024000000000000),
    -204: (1, -30703802307926880672, 95864841637996112067555072, 775121756231241041610849730560, 534484930703209896960446929872814080, 6020337293681148983229932704488367325184, 28508041377034538166862450172153093456658432),
    -207: (1, 42653766018394018375, -5002547112103664005187500, 1819343755841562591564610147379736328125, -210672109851582446065248197114115955810546875, 12041028291910181818274355885092809398864746093750, -183426864580818496179793649372867188930511474609375),
    -208: (1, -47568078792050004000, 4032372412181255526000000, -3908668494888708948000000000, 1463592841477827633000000000000),
    -211: (1, 65873587288630099968, 277390576406111100862464, 5310823021408898698117644288),
    -212: (1, -73387074029381328000, -628986407384453487358016000000, -2630171369254890916959016960000000000, -11008353578715780277672803110912000000000000, 39924086528997881772669622484992000000000000000, -67450134022842979455115194007552000000000000000000),
    -216: (1, -112760061542456628096, 1197383573848845385478924955648, -9056150910670523557375044574248960, 129141069874109492050243812631108386816, 34441927383131420224661352250608420126720, 9316863967448371969962043382716305179148288),
    -219: (1, 155212323706544357376, 831039118453558669939310592, -15979705448736682450562851012608, 110979720274963942538198675506593792),
    -220: (1, -172572544407169076625, 2531540097646020954716625, -6015443509589489085440390625, 4189527305843979870968496890625),
    -223: (1, 236855705574161972250, -43072684586065004589140625, 56100625266918564788759127557586158203125, -10118589468858067354789356763548186038818359375, 904981240117595334764254951261845701135925292968750, -3017942224498278012503966427816688964673110961914062500, 2606386098587221959562486420442180281995713710784912109375),
    -224: (1, -263096730270583432768, -1723077455096553031935888128, -11042808304392149169199170364149760, -1547817012108377539813804203697900199936, -23454276662221670119469240221271015345094656, -134143607306227801938718107847574206949591351296, 333907584600306671024017785849535798840531183730688, 4573574179879344596745560367912999678227803908603904),
    -227: (1, 360082897644683264000, -2562327002832961536000000000, 18227340807938993794580480000000000, -2111118203460821622718464000000000000, 5085472193216544027705344000000000000000),
    -228: (1, -399605224650084576000, -7985216535621460489954944000000, 58827548670433207062445836288000000000, 120020259495560805847424176128000000000000),
    -232: (1, -604729957849891344000, 14871070713157137145512000000000),
    -235: (1, 823177419449425920000, 11946621170462723407872000),
    -240: (1, -1370337635584848362400, 15510636623637225985530243375, -3213137488352330508627918491550000, 51848746810441819437662737568196890625),
    -243: (1, 1855762905734664192000, -3750657365033091072000000, 3338586724673519616000000000),
    -244: (1, -2052295773725248986240, -92973717558373200586964869091328, -2691275293785918359227938328726732800, -31292753080096691789898512325924416913408, -24417475317780070950649666808040757791817728, -9815190670232173018201554731440614047465078784),
    -247: (1, 2772410642909877080250, 888629892547516768433109375, 7686260773063033411724550958439950781250000, 2475076441475565987510057965501956793452880859375, 400348022833121004028281794619328068026346954345703125, -407336295332190846580777495118233696120388820648193359375),
    -248: (1, -3063517083860376640000, 169518269276842782112073472000000, 2461626754066908714341150658560000000000, 35762831246449484056560587036188672000000000000, -27750969592459084458872706174812160000000000000000, 271994089256402280576009987295281152000000000000000000, -1093432823745012115729536788054671360000000000000000000000, 1323449723347621474969758725859966976000000000000000000000000),
    -251: (1, 4128446190315309498368, -66204185373144403998280777728, 1062008880270126105976008028408774656, 7966552994949346594041401247164174172160, 416131608793437401577832999781610387970981888, -1791911545705841840084320427251134859220759871488, 1937587239465703269672056660685864050152464252403712),
    -252: (1, -4558302700896532039875, 10887176246183122533468750, -2443574658947106282398437500, 398963060554172791168212890625),
    -256: (1, -6761166974781862161312, -1826592673506207200904172752, 26925623396663008311375890966784, -1064410681181869521037208505239142408),
    -259: (1, 9068999694311625523200, -368189472100537894019530752, 5493320206929896679139197321216, 4384296738486457527093398159228928),
    -260: (1, -9997874035270492198400, -999896161895842101863690217472000, -21507054600723946274941348498171494400000, -463238908732347767153420578775505775886336000000, 14865557804649865113150034077076664167379763200000000, -85980083235988029405783249092189509918128078848000000000, 305486088367929951707960768526477860306636557516800000000000, -3302947505675715028946774256661472679426359558144000000000000),
    -264: (1, -14739806897587232709120, 1789885567319176457551625511223296, -43813781353344480858785503406172212822016, -1576759051947634872250887243973927048713338880, -19114071480061200751208790258848908645703796916224, 189771022593359719599623857042603680684355481140985856, -171749422417263603359883069647289043394815149890303164416, 327886345447155202813840576100201205111813144244435638288384),
    -267: (1, 19683091854079488000000, 531429662672621376897024000000),
    -268: (1, -21667237292024856738000, 32240842762858236972000000, -3189376432736929569384216000000000),
    -272: (1, -31759326199909682088000, -992292506997017283600644000000, -31424909544599612739578321240000000000, 13460227027917301519133262366182000000000000, 3861901192470234862993839021544000000000000000, -7711135475352672738710945448900000000000000000000, -7751659760972060765625755308904000000000000000000000, 9265833623430102037137881938273000000000000000000000000),
    -275: (1, 42230108051959368384512, -1470671864720383632491493195776, 51213041627075282291106746090041376768, -3984711300201636241319486354007863066624),
    -276: (1, -46421840776490384352768, -10000254249186327541943559851360256, 359684269203806519420937768802377441214464, -7594738933192260668250057199680097904322674688, 407334970460053160180107543216439671099066662518784, 767440733750724125562378402812781678248671343699558400, -6523546308273811582074020329970859860219102556953002377216, 11579958468886822266431515535986431304105856851373387044356096),
    -280: (1, -67667966893419063840000, 17602516524144666384420962098176000, -708555761206745670461365038563328000000, 1775168961518724506399346503073398784000000),
    -283: (1, 89611323386832801792000, 90839236535446929408000000, 201371843156955365376000000000),
    -284: (1, -98373700603090523199715, -4546951697981923176956448676986, -209903939873446020495519316596118272758, -12543980353722772760179537174109237891242365, -282310474518147042483634599702449209357160103606, 904330206367752622526324160408849797910089300094965, -709822597815616788561460999971455889888479357689323263),
    -288: (1, -142637765058468510772000, -87330008255955399131086000000, 136478143044657426076564000000000, 40994594700208456153393000000000000),
    -291: (1, 188155567079341753466880, 10786588141336392324590050738176, 285389231946718842181542553187254272, 21782000952710117887925312635418808680448),
    -292: (1, -206287709860428304608000, -93693622511929038759497066112000000, 45521551386379385369629968384000000000, -380259461042512404779990642688000000000000),
    -295: (1, 271602295664902418108250, 289315392383740839332561391375, 73767807010599056699488845989197941140892890625, 78688417471647009524122019473588050719938852358765625, 41940062336716757201181279559382045880935056981401849609375, 1811885751513084753220927364888013159601085995323528927843750000, -1122282566856104887683461567415963897525574528336611314070556640625, 822204343689207610829131926678660596532719371553249925736718994140625),
    -299: (1, 391086320728105978429440, -28635280874816126174326167699456, 2094055410006322146651491130721133658112, -186547260770756829961971675685151791296544768, 6417141278133218665289808655954275181523718111232, -19207839443594488822936988943836177115227877227364352, 45797528808215150136248975363201860724351225694802411520, -18273883965326272223717626628647422907813731016193733558272),
    -300: (1, -428244362959801779810720, 32278855882815402576742692253440, -233405320133674124312518469774131200, 21122955530832902270001123584504233628467200, 62082816308629282586712746552975312469884928000, 66661978554978958501295319312489107870472732672000),
    -304: (1, -614772722255836378993776, 491686666270349693036542004016, 45378991837771215221573080886813184, 1528346968785104896068323613180201480960, -7791225706498882399085516838831185545949184, 15932156097435253410695381729009112036477505536),
    -307: (1, 805016812009981390848000, -5083646425734146162688000000, 8987619631060626702336000000000),
    -308: (1, -880456353881469533120000, -826239775451714421096341416192000000, -79176840236445969178233162764226560000000000, -7587984891492127439982947268653129637888000000000000, 118013359737143520552180913373061918228480000000000000000, -1171071469575324412445157804913269173911552000000000000000000, 3577524548867479876566112791807107740467200000000000000000000000, -2165234140612455295554925190568825369657344000000000000000000000000),
    -312: (1, -1258031100283439093280000, 1411168483733488619338991640960000000, -152340504750882110373595179663329280000000000, 1698899690981885675579246225669492736000000000000),
    -315: (1, 1641640623633325773619200, 116880346596078822090604544000, 256755031834901461034493542400000, 16319518649540946810407747584000000),
    -316: (1, -1793430629453261849626872, 80751461998466194163273841876, -9055029354307022862746345001271887, -2607636724575654685306407800818058910, -4020052207065827322924749407724450555391),
    -320: (1, -2550974942438428429832000, -351576186089909152920032851988000, -48038363639231170572648019974508552000000, -56386716220649524857687143869160670299546000000, 4708256714605528132855853397305987244611432000000000, -7574662452833544808267664613170196102721059092000000000, 40944260711262093619342150509430807605037564840000000000000, -57164948756214588760973077375749617090767457040719000000000000),
    -323: (1, 3317765887009185280000000, -494846073292941121091010560000000, 73804562114102168041788801024000000000000, -121974636783103604190112617857024000000000000),
    -324: (1, -3620548496603402008963200, -6889085634124971952835571514757910528, -895899811825836113012019702876374414917632, -44745106433723692853594036259593171592240168960, 23450077655748415730757884569939472490942286528512, -5061569724026170821913022827171999159041259361796096),
    -328: (1, -5127512346913614444576000, 11610744584144462730131436503424000000, 54802167111836784369290132453376000000000, 88955608603044673650138130944000000000000000),
    -331: (1, 6647404730173793386463232, 368729929041040103875232661504, 56176242840389398230218488594563072),
    -336: (1, -10219547616980464664207424, 2236729401475844126906097351528192, -4122531170951933374034612225161882890240, 299479829812492786489431657403218202573430784, -41883539580229682994226324655826279489238730539008, 243646964256505612639601181466740517292489442075869184, -347950410707819273313423258639842274603630233028126572544, 356139343139022726874047596959786206788352553881997374652416),
    -339: (1, 13207870721923966705729536, 3119834163056249586908843992940544, -527926973475401681480399895797881110528, 33494559320437814886965525300815718579699712, 114053138969457254141239955759498317338331054080, 419198194184232019280311537075670994855640493457408),
    -340: (1, -14383245771217510630675200, -54548817402421378465247510316573696000, 5906485031594874833231597894020684185600000, 43039377624755967291385639037347037184000000),
    -343: (1, 18561099067532582351348250, 54379116263846797396254926859375, 344514398594838596665876837347342843995647646484375, 1009848457088842748174122781381460720529620832094970703125, 1480797351289795967859364968037513969226011238564633514404296875, -3972653601649066484326573605251406741304015473521796878814697265625, 4791576562341747034548276661270093305105027267573103845119476318359375),
    -347: (1, 26032472194627246481408000, -7715358558261498003922616320000000, 2286617351979618165608274471157760000000000, -76862513895106262259943954448384000000000000, 184912732321277851630780880519168000000000000000),
    -348: (1, -28321147554737698717243875, 8632839017824414061478365881968750, -29003873161616986468921515894234375000, 175290702692535339653340200368891845703125, -557628723010969157792086142065436920166015625, 692471208858544440424465339478399814605712890625),
    -352: (1, -39625012256717991533364000, -99328134588221245548396654000000, 149685745558232337507189972000000000, 233814863662235465757810993000000000000),
    -355: (1, 50912008581334742581248000, 6828932041616339922516443136000, -24013762453779394698078584832000000, 167490001660588917859010199158784000000),
    -360: (1, -77129618436806598479116800, 677379083861505776249205316176795648000, -109201441323221855310782334283691478220800000, 1056941438764906800130371220070859781177344000000, -5014253154692679554211489347981698555025817600000000, 7790473141693937112715892499559316037285445632000000000, -3605298995795783483578591919397362740207445606400000000000, 1426271450575358799707287311662232043638547808256000000000000),
    -363: (1, 98823634118413525094400000, 45688143672322270430861721600000000, -496864268553728774541064273920000000000, 1577314437358442913340940353536000000000000),
    -364: (1, -107310393727516367835689376, -26945321066119881266121528480000, -1114180967095768084290666504793175015424, -280762269320568601992086689163982842916569088, -26779040013783862224508884712755413392899723755520, 171457302312675538238450398825818559998229834899652608),
    -368: (1, -149030963654426202395206000, -78492653237795758158907987231593750, -41615501434303103741344598557507373625000000, 146380756273380282900056220504251687443860595703125, 64648812618671323095979973667040653072044433593750000, 13801356390308204318085687229009161734928134918212890625),
    -371: (1, 190434010944411944081817600, -109540453196503351362058007909236736, 63021516974791355216056421758428516701962240, 7172240473520895634328741679079956332987799306240, 2070241046195436172786577952290406334822086904677138432, 7955226967369897728024063900920070991817063643388946939904, -9437193278662036228901778588613351480444207439554487798202368, 6481710157163553710911373989049976082636826853040877396933214208),
    -372: (1, -206603714804587147622880000, -2969541010382978868435960918595200000000, 1755509254864401819594526832548625909760000000000, 41393149892607462736698558825033501904896000000000000),
    -376: (1, -285916404518354292888918528, 4834578472269821416642158436559525756928, -586249792527212606449056068824115539869696000, 184827248158834773720244437191295069873105813897216, 179932812124131487070187094018692086667311846447382528, 6354570979875197989882015972560265130690833840153389170688, -797108085258416768239159045199404096196155929498778840596480, 80898104235942224796361592859684324800100361568262519760355328),
    -379: (1, 364395404104624239018246144, -121567791009880876719538528321536, 15443600047689011948024601807415148544),
    -380: (1, -394994873978647592617839500, -289732368808418290869258730884639250, -212582712625033364976551927046111751635203125, 44558014626112116039445790693994428646901831265625, -8964225534615584378848687224200406866569893419921875, 45758458895429777332163802772987429018048423368283203125, -128787850158846708103261774834423267545187484192877197265625, 154215879682420877567016388990140832239111930071845605712890625),
    -384: (1, -544762334416885782913376064, 442082035651764829560867879833566944, 2312253770394848226808182209508728124292608, 816256863839287996560655743292894359216948004992, 114136603746893420728906514073872982254460934618165248, 1133360732759543594222383565809483298021580285170794285056, 3743499007599796904236793148179525863855817609254935309680640, -22711410532604569171733553168033738705419224051361861808943104),
    -387: (1, 692535742940813486100480000, -1543710173513675490459648000000, 747948304897905210163200000000000, 587533119951491680960512000000000000),
    -388: (1, -750062398364686994581728000, -20542159225989612130996373047535232000000, 208224136957169320201407896480139264000000000, -1121692648948590091501551223636881408000000000000),
    -392: (1, -1031035485922418252150848000, 33105241098434341203696292582622976000000, 33445080645611538227880551984384751538176000000000, 33788644461689194999008656146120452671373860864000000000000, 911286677087351758886930931055935520715359649792000000000000000, 30036789099331980675088636409295029819907647733760000000000000000000, -108030268193771819583343361520403706045703236091904000000000000000000000, 100819613411003977098553037150153312012282626048000000000000000000000000000),
    -395: (1, 1307506076380207488835584000, -1429395109545314884513819323793408000, 1563027318051423630273876232667142291456000000, 419520145342308306493930293009244561902403584000000, 1711401607152157535896445361731998420396146688000000000, 9302488005249450440540192118814845845056811696128000000000, -65554873109416897528089562414278300430987083907072000000000000, 75842586946704938664020551497033224470255633910726656000000000000),
    -396: (1, -1414968042064378970672787872, 242487456790940831195516923473664, -53329107003371259961886231710373417500672, 9042581842659781853871610042261233665687093248, -3882916848674920220024612236964484759319495663681536, 7704857441223851094181212264701978984938736673278132224),
    -400: (1, -1938773508354872717845384224, 12869286863161864184636279443710336, -19075061455767889406477974994607212544, 87448873738295790450948276123544550117376),
    -403: (1, 2452811389229331391979520000, -108844203402491055833088000000),
    -408: (1, -3622859125108878497350176000, 218066148024051247931306674050097536000000, -334918514756463762318006309600841904719872000000000, 13375974716483932888129605820405217248677888000000000000),
    -411: (1, 4572839098768838399956942848, 7591033806233449501451135280463478784, 1544633353160505212381702428744859800043520, 870431545791433602355093719805848213678257602560, -4679673657864301179943258144578870967000652618661888, 73029635693775668009059727434983158067960210151050313728),
    -412: (1, -4941005510420834249209618125, -45283522158500555084406507703125, 9115476296360278267158084562500000, 1091737124643141462807028029359619140625, -4191705834203632196398028235232269287109375),
    -420: (1, -9149442836345200514625984000, -875149953790588830141513408467102803968000, 1830759213424837201179800381566577321252585472000000, -654322371647418124227660658480955270871337023307776000000, -25522767602086427249222314481632218756271917729054720000000000, 343101579425550237027264306100046973285019210099445465088000000000, 3322057458803342041196516880396913435501050824830746624000000000000, -6774993267880302065499271589077244607702692106378720313344000000000000),
    -424: (1, -12423061195029429537745759104, 1384659323070129593431064385863072408432640, 926676088876656917610604147887399839119029829632, 236813677534123887255838256365810161940182080793083904, -473081446853521752764184578414407578553597912291215409152, 256124659472476156429866214718645776584030123766932075184128),
    -427: (1, 15611455512523783919812608000, 155041756222618916546936832000000),
    -432: (1, -22804995243537595825782822000, 280179539493990596285512318134750000, 1007059405271040783775694468925000000000, 34904627315764077727184412247908187500000000, 3869372376492639837782614434923625000000000000, 42889619864187195342544128412237640625000000000000),
    -435: (1, 28597298728131202056826060800, 87465379468169320817492479772196864000, 42866222697779107335351550466659555737600000, -12512019875237835915942574589201734434816000000),
    -436: (1, -30832919939688372877918428288, -5414046507161941300684943471721179845005312, 1693419722764462128370611200560660741876060520448, -1352721253689086960917768809906285566915367850230153216, 4190391048071364469026866970440363614326632840014231240704, -3309564689920675611841021602429307330976712868047012658937856),
    -443: (1, 52095503201744864610381824000, -194566138410048201097018632830976000000, 726664457760516471225292785548752060416000000000, -645677619572710007907896290848702201856000000000000, 1580383899632304069192804677639613710336000000000000000),
    -444: (1, -56129827213179693251640492651, 214860636923611150365915653407923542874, 192270529336519685224292414265922554522160677, 65188663235550404583293908008034924632905295580644, -880653261173369502922635628724470508870394419131363494, 7941658857796452610472278491206058572032514051868247012788, 35757887140074712903193903880466181893290971969408014389848265, 140475666819520368329021729766569070209916109529535976620891612417),
    -448: (1, -75579535015741588088518020000, -1251995474985759392628697477841250000, 18314847446238545696830716579562500000000, -8964424282273362890505339044524081787109375),
    -451: (1, 94391735188170044104985346048, 37732368326837192349624395555143680, 37281139264035594329231801543794366611456, 584470709556329910881460450936625902429143040, 6538354632239239965706431356575791482338510110720, 248738232385414940352605447987918942762879391105024),
    -452: (1, -101634035376709591598457280000, -32401499673044080264344593618377378048000000, -151206805620428018201992258723610356612075520000000000, -705631739214792579865177249718891252289626202677248000000000000, 50734273795448900729776882856979627119952543763660800000000000000000, -3434757541245962455455585314121174603013951177855336448000000000000000000, 7142314818334140879780574556716393873385301585470423040000000000000000000000, -11416662004233744365076104225688575806170783104288948224000000000000000000000000),
    -456: (1, -136491683486572922249812990464, 50427256223409204218353800554361001892364288, -259658556171402414149211575300863604618960575238504448, 126925519715783333920705563880368538661948026476491698077696, -124954167491964417442632961316458508327590070661699479522814984192, 8467038189461862871498232972810788205187612911555813330439126242033664, 1730649898406031932128295806424087269049881796875556937979523821750714368, 1248918496784071679311916182672622781361979369435685895809476427409602379776),
    -459: (1, 170132875256900610745209225216, -194122915779480469587085735929839616, 84716558562768338346996644375759262056448, -347902720129642555336433488166664447480299520, 625812947073456566584812280878079219774059970560, -313486865139741282237104926958928242066616974573568),
    -460: (1, -183068125539610033421078032800, 129803048105744559992341062593376000, -78327919900899962643340281002349422131200000, 55421606473085222373684460941329804874243072000000, 276071822532474892071316268722729067476434124800000000, 12543639480429066293430609355779410430756351541248000000000),
    -463: (1, 227970800726332644342287312625, -7043755690400037749354220629309859375, 51970685983805377333634014414418185665726831476030496093750, -1605693344451100703401166090336916249468909839632742598689941406250, 24803663967697771228357110388585262448987981420325448447373551971435546875, 179283783979941926953411418372928305162361740552420304242063526283264160156250, 401958201191385930754881386234468149942131409474710541242526229371547698974609375),
    -467: (1, 305086080876305722343886848000, -2053828567675288331297977498861568000000, 13826267033925954485102766290610323193856000000000, -193391929303001486531692307095910239698944000000000000, 4482616421350859015252361421040804018782208000000000000000, -20525778000912907436431434169493188780228608000000000000000000, 27129499991079414558992889588446791284555776000000000000000000000),
    -468: (1, -328075211021936819361135552000, -187914427539105911963195585831988734208000000, -4683655786480679372458417401028686483456000000000, -30208651678021480926348924594833080688640000000000000, 137371160123909256018788501396644169515008000000000000000, -118470851124585049245451596435428635312128000000000000000000, 339536133003961513783146637752654693924864000000000000000000000, -340463994147289934602083608272153016795136000000000000000000000000),
    -472: (1, -438370860938320369278668592000, 290243510038159955925726906822209766336000000, -6621978932864958986465185964976874629120000000000, 89663269021650272593765224657345386704896000000000000, 7782762847555792408664371720856640749568000000000000000, 609118140629014547427739243406522843136000000000000000000),
    -475: (1, 544368813426921255662610284544, -18897945215696864441083229261266944, 207773856463139688132677943482420035584, -241309172434875116180341986667714653978624),
    -480: (1, -779808988929606476240022120000, 7155256596560029198962042678195854112000, 206455764473848540638971437457166653697984000000, -203722161832791982074330873124726391970063405696000000, 607160366912606109268501665359513440486260263424000000000, 5551510308698596711118503208118747677498009172215808000000000, -9173187663430788537963032978719772802158627375837184000000000000, -39960503632914197368880697337566374378503148939833344000000000000),
    -483: (1, 966618711103413979025620992000, 9557426544972522152310585774047232000000, 160587932046974848398336021151875072000000000, -296241507936739247491345278560108544000000000000),
    -484: (1, -1038197035676506069321210304640, -1057839251114856607055720360537330350583746560, -1722172017117768441995881689468749598391253068677120, -1071309761927862459988530157923643325520271635829972008960, 763766482177380291593937467835962528924999624812141731643392, -790804636706798790802256045970879381853704727181511395005956096),
    -487: (1, 1285765411850702320617829512000, 61230417235420005106633643915668500000, 1653192694311607617535078467802284855790125398437544355468750, 78730410932026586018656083147661205139415494421562037554789062500000, 1874757683029108665155742485334477560543463641951079278616042397338867187500, 5588885680608056383304285092512678508996655379519917655702570596500396728515625, 57421135565132223891557098632397533770305157302819821962919612248361110687255859375),
    -492: (1, -1833713665546358542159577412000, 22444442051052113469935717401578204000000, -2541265400786050984712679817021050336000000000, 30393066643081701907199820448173303282643440000000000000, -33515822578148761626323796875644246586347584000000000000000, 10931222269636259868789874889218075826344512000000000000000000),
    -496: (1, -2432787421339920412482146578800, 97788423170643342343762148048633899941, -70831581292550651074090944215955019084774944, 134375279197206001252258427214455143691428583838378, 5182664622152485722685558956575902930955839208869950432, 61992798182727056220505257386995728000704825102649533554689),
    -499: (1, 3005101108071026200706725969920, -6063717825494266394722392560011051008, 4671133182399954782798673154437441310949376),
    -504: (1, -4267496525087796057406579169792, 8815760108240906038966529880878498124402769920, 18788128805322211910551466490718878898951692369264640, 15164525440459057594603775827713458924796503551119156314112, -471574195381302540308529203117979112030331766766182433600569344, 2323993000324698254869780822864191044228454555465898180123012628480, -3897600815758292789948726631304282544292227740386913793601062691667968, 2799688042013765974581855092377396098624947792100121681698929056524795904),
    -507: (1, 5262585338995033221326389248000, 91537611307702496719179485710123008000000, 2658551097838253705341260639403769856000000000, 52801843586884277419825606742991962112000000000000),
    -508: (1, -5642626022844047596709323728750, -46144011598251049101578232084609375, -225348493809521765537422792233398437500, 53837780625702373569505874473236328125000, -23012491049940208859981226392177581787109375),
    -512: (1, -7452683886314845038967022344000, -145963318061678312360174387732317218500000, -2851114402367216695790564469103305040242305000000000, -148572702855778718412466858841748276236039359231597656250000, -223690975937085875433060751264894961767384572256109375000000000, 391490552495267097159787120207959794557048688265606445312500000000, 681203773332039691893050931796665219768053212249755859375000000000000, -806852196324512749711177421724928934161602703561365604400634765625000000),
    -515: (1, 9175438450996787302014492672000, -192074704335054414490094597558883057664000, 4021108268646819914222211212116150442157670400000000, 6259740439766871889137441931457556788367376087252992000000, -3107115217734912014460860938978340298227921413210112000000000, 44195318902652537887832280872617801166384771408066510848000000000),
    -520: (1, -12958889442406058296422344736000, 46650003139146307922421888174845453223975936000, -78006534528871949845908360976579586206001479680000000, 171517475891022372428505519185548559222346497654784000000),
    -523: (1, 15928926361335375229020229632000, -236957616665436077155248242688000000, 13395061255385032931309223149568000000000, -8335801454396454796105214853120000000000000, 3397618365767017867913805692928000000000000000),
    -528: (1, -22437876453496773112166179752000, 634407243120218221454715363762308604000000, -43583958115994354629809488173134159381336000000000, 1843432957754824762877050635202551236433894000000000000, -49399290627400664448231786729782700582640152000000000000000, 260074116152839631239617979770103282895825724000000000000000000, -3125453974501003826528122952771963651286860136000000000000000000000, 4988393622915667926124020859030025205499033953000000000000000000000000),
    -531: (1, 27537270228600020374834178392064, 31476922594694825843813187240301953024, 101913303540872546991651789090862425056477184, -5668347118698040482683727597487173897920299663360, 89695055074984733543572254320373841113802328038703104, 253019721297801601360183161111100670441677888450509930496),
    -532: (1, -29478909019098139074177479136000, -160054212938390343773833947283393690785408000000, 5131537740610192962070880163006969643272192000000000, -19077542993352945680961028994697271308288000000000000),
    -539: (1, 47410121650650301653432335925248, -1716077476743667409888370160098275988865024, 62109863363003743433903162606853581012680421194858496, -217981732176056066846071789416714359026166245977669041651712, 292526361722254725823538617267010164162341238195314204668707471360, -2208425211409708405613626208046070387779355774705344999909565531160576, 4261991149768461489213323496791559948794987690089863268831480604098822144, 1144459052643366311610439351265038555439404235994701823391653412879074328576),
    -540: (1, -50727256906489049145803328275625, 111924477234172546946300759710144789125, -1406534299971645322507825760505592082625000, 8447962021182385992754037292591932158628718750, 5566107605838844555689235368518602993799267578125, 94309638503639876530118685319843252440163328712890625),
    -544: (1, -66443353348592333221809555207744, -6248339790094127204968351395966540528384, -22892806287742237518499426963720721767972442112, -32419065600743445230946572610601158137090004801921024, -432522777991807229621883601376511184601871339411006554112, -35702795631006922750685000006261508710356282765489810248302592, 102086912171771116817796794947834892963506005427904794963501645824, 3546089830243092385615929023351941513205478912902402742839005333684224),
    -547: (1, 81297395539631654721637478400000, -139712328431787827943469744128000000, 83303937570678403968635240448000000000),
    -548: (1, -86942389891535571387895159232000, -810679935679825582353227029639493628299520000000, -35913514563962808407375283139347172053211266813952000000000, -1590986068171697316090499222810749646317714109166272880640000000000000, 328860467798330152026138277690382532201612700511391601917952000000000000000, -68969925509725263658955759656306082347381966434548077950926848000000000000000000, -369511718934717082008120249435842871162487306630914113536000000000000000000000000000, -590518364908089997157788286780557493338263451790244315136000000000000000000000000000000),
    -552: (1, -113654378836535352053072666688000, 1211661287326221121647888045036795713947392000000, -58691611938818455012339509695021606047668420243456000000000, 9038247293573332903169489007252044529427146881654784000000000000, 784981509198717408666378173537115910201562782880759808000000000000000, 17960043006420077918365652794024303539913763116393955328000000000000000000, -1491869338681587120775123496943489151278113693267656704000000000000000000000, 4014753581735003605099707048940053282890161311449088000000000000000000000000000),
    -555: (1, 138859536630220704987259502592000, 7191013406366483381037450688276469907456000, 19282254568556435196991625190065063388512256000000, -532755731205331063356397364951543957176713216000000),
    -564: (1, -252431252389499030278869212407296, -4010633301324997153376681649711556335962683097088, 253450842651286374093742999966154467299881141887690283679744, 1302812260970235447356611686844899893591737005827828144605136683008, 2625550468143840642133580169868794560581148602007440852444168880344006656, 579473691440252779828924728815673313990523698707440360772339652903654316310528, -186423153957074627217818566668875191535626845784427349342910228378668486478528512, 1410539124587286819594160671955922149433268352692068786895315904358800938785996537856),
    -568: (1, -328731508303364809994652861984000, 5960215994584814927107650154330552605647232000000, -20244861194040338252021384794239225557256192000000000, 17903747548118085544966894162888109264474112000000000000),
    -571: (1, 400497845154831586723701480652800, 818520809154613065770038265334290448384, 4398250752422094811238689419574422303726895104, -16319730975176203906274913715913862844512542392320, 15283054453672803818066421650036653646232315192410112),
    -576: (1, -555945849395316019166302041083712, -84148257487716879382693739006011130722848, 180124328580974236194223495011442865285847657984, -1070353558135299522123047513088476157789564153081704064, 2480782362943649249382108732853938143628584892255169449984, -1365764709104650008266673293866920077982749326584527839660032, 88116521568151584654036201686737798333142606560802872668139192320, -7602490733367488535897668492863137470392617456264775830022452670464),
    -579: (1, 676387026992113450418827441373184, 59369596213670280006060371111787973029396480, -355122564397718134453623922597744991048394816356352, 813252088012203280786637779721301238218392085073489821696, -19228720281929478997861296918696489205537963466212473355370496, 1935790582495037184837110530204500965567499242790121844765060235264, 889018614566106780555955520613217606148244526529209723237842473189376, 464793232343043366687149097962066772372436476624601281935812010755227648),
    -580: (1, -721994371141654983621057960384000, -19399954774822931642109937778300582467033049088000, 70673010179850126682628372153395761510501489672192000000, 6306662778286541896224720215753687993996186318789935104000000, 173217007083074231180921840492523500694094885049440665600000000000, 26471525240640094299611509783726774850968702835808962347008000000000, -83739778810631947586278845749607438058966141170065086611456000000000000, 198368107463433017941006791366516074514256704929312208800710656000000000000),
    -583: (1, 877815358561694090436309899526375, 213687783014367910404538221903981315562500, 770559803726795588490479801073714416794993586323673088060339843750, 187579563689438993078275012426193351931475823977067311551061949434570312500, 22831652887675839809425610107112362235050044467123090293579232129459071014404296875, 205213621872793706956814679926046328336330763376698513972794088442834571449279785156250, 3847861626831776140177907944066571604742540817163324687287108373890033208510875701904296875, 1590143082415425099832376722791937259208120703181660837720379331722520166770040988922119140625),
    -587: (1, 1138212574651782271861893763072000, -118840621090042353846268441242275676160000000, 12408121464739840095494810222119511810092564480000000000, -1196192801910538190537501166807952753551892021248000000000000, 35495224444423948749828541418253640332882575622144000000000000000, -19523831231348384917508345284946898016410494042112000000000000000000, 748765079750903678495365866324569504346756859559936000000000000000000000),
    -588: (1, -1214418339247561600451288629572000, 129566015701225407418600263236982900444000000, -42689249963097095301009077305839336539616000000000, 4515181954964345872129019514813523000853053374960000000000000, -6126070918172001115197989066875857222316541112384000000000000000, 2320214404236209026697667252031829533741926076992000000000000000000),
    -592: (1, -1572930194931239851927605196116000, 313250432161122948352163248725179238000000, -466359042858849293316032894138251092000000000, 62432994413265034555246757429466475569000000000000),
    -595: (1, 1908606683491595666107623383040000, 8752111455147508300981595950899265536000, 483054636550112292687021684688517332992000000, -91399742601830803813322386656934773129216000000),
    -600: (1, -2631836103739116229072915919018496, 135017303206384813041472625874556363749460749041664, -18641276292253812460007663722866367267688408822355559817674752, 6521729878535446154278409534452392826707332084898957563834425933824, 91451832856249850749235233312508618806959496173472729513610223021981696, 24156512891390177820296550150936191360793744111937453705629023257758265245696, -61282939096755094303393175061204181878387076364637532503966095425149106460295168, 55013380133451393116848595517196372565257506885892427360818803276704780162093285376),
    -603: (1, 3189372971004509360884026494976000, -7118624290306318120963251634176000000, 3412681538174356730332626026496000000000, 469351599148575084436348037234688000000000000),
    -604: (1, -3399966604866752996234882792516118, -27892560713584967621392836420154057195467, -87265570121736949364749103114574552336478295754, 1972365927959206754270912573078693432452072601116122, -20749638033764370644667918509817688533672193402905398799, -21319470454179879685723776607133376307443575059942846246545, -7012146253203503912831018430842715194031196057598620127481087),
    -612: (1, -5659876044371959794523441504704000, -425804630413623702061423925745792936499742976000000, 40333788093860130358682695067026076630909972480000000000, -2290622458564054657603845877685847902615339245568000000000000, 21088996971330859051550580999287716400647200571392000000000000000, -60647700418651101075329167193338060993220119101440000000000000000000, 64385398716456586511259634496932570397458806341632000000000000000000000, -15571098856932416432452346693067405520732046753792000000000000000000000000),
    -616: (1, -7293408905015292299958781016209920, 622867749031723592493894650264766096595528541257728, -2324270361846276694520289144246063962274570610361713557504, 22015145396000446122535780492386767387477172709823430101437513728, -1509969588210077671850355610553825063590552171300597114606956539019264, -735940732480031475341295570292750267451601629452483959056301009848500224, 2700677818868483334143493918654373479601273935130176142170749678205435641856, 11560940605988608775021317978622345492706919224700295857630419662012226685894656),
    -619: (1, 8816350462749494490997859322396672, -87016716912343398450728998742124757254144, 326238883724948585436745550058572488040138145792, 28493830345553696446401792570748375365356507652685824, 1646062182335949197810917415545902866747444946845936123904),
    -624: (1, -12081208936232946835974528691267392, 2776009013186625130059222083251004824229999988, -889635385561600455574614631815638447700551730035013312, -9621269365319716201375903451806501673947384352719617824411634, -39428213197329507391941426442724389924654284081666013188874712056512, 111572886623343147663630623008495040639710527701226046358651893948119597, -131955483795983141701923334415696263798949802626995349783072378622040774032, 102548297330276179793325830900593766828176427011543250758911519759091095154689),
    -627: (1, 14586137722924213400310156521472000, 3563858169242172480409901737583233204224000000, 526326624169690832922357632213666758656000000000, -1261687189208313891495979730091871567872000000000000),
    -628: (1, -15530070499668424480113373087440000, -1935352780955944330159655079539039563020333120000000, -62749081242237832118702516655452609031428167680000000000, -11306325980421358690756668239288149306045473558528000000000000, 2244973573297457770564792736595644257458378178560000000000000000, -193480668290139827978551941260794168997079416832000000000000000000),
    -632: (1, -19947555143901432297225495030848000, 2817303777314491542198439675939656413173827328000000, 764066324240903098557942341866117792957681012391972864000000000, 207218464905915998193116571927979322720373108284183824226869248000000000000, 106829316722129775247627565895561429417067966526797538786508275712000000000000000, 55724235915610201148663635533333380165079185083147643595058601525248000000000000000000, -205488254882956257205479218794806299367131414053420769060690765807616000000000000000000000, 2455690780734897158024652314220420994123935277811138917072713665216512000000000000000000000000),
    -640: (1, -32831816404527409021029099698184000, -13709186884725300434264481820110146306292000, 113340022902532960700341451328360099391817016000000, -12192015970979998111636928370459610807085065697166000000, 825645933545585884183454303042164761317468456494392000000000, -208224713897606493365400670528073218506373263196739628000000000, 480772669868710949294360006170595491440464592493228248000000000000, -581710103322761859517036426143314268891628534114908227919000000000000),
    -643: (1, 39545575162726134099492467011584000, -6300378505047247876499651797450752000000, 308052554652302847380880841299197952000000000),
    -648: (1, -53870596955882124816323280316464000, 12503387249746481540592689090608670703243756480000000, 91062241689319860183508830989589146658538772480000000000, 708496467215673879034146895464634305344685797376000000000000, 945704570192557917123296384393395078314143318016000000000000000, 420259747133910150639354663643453078777790464000000000000000000000),
    -651: (1, 64812026197729426550178459657240576, 26034366770144460869683948058018263181668909056, 149807147439202860005904946308171008696904675005300736, 2201746287081394599531696187598856165332862423537538188705792, 194061545533182518530854613232829236130187347228804642343458177024, -912999388135258927743103857780845055354520225412727777466772650721280, 1560118463031527141221515438671888287954223071567667616115946475371888640, -837262586007462653261909466967763200588899395236480392253092673936032792576),
    -652: (1, -68925893036109279891085639286946000, 102561728837719322645921325412908000000, -18095625621665522953693950872675200892692248000000000),
    -660: (1, -112580501740220781071235722688652800, -37774101659997423005408109970789812947961704097792000, 18239982511248258426444458529164454527146102008187866100531200000, -174143430251936272102859349073539136097610895959350576901027004416000000, -129459690207405843746931738609689674381742368424208527099314604448153600000000, 145752537220577621057671362142160834897197172505227599866968670493212672000000000, 802614337824902100615094698396471270494041411707339702383464010676279705600000000000, -956825222980306326585980265538528042697197583016225087193752883841407647744000000000000),
    -667: (1, 172524940705544715709707399634944000, -3737847346141410401145461932032000000, -147087485221823269890900432519168000000000, -278701754438991300992352387072000000000000000),
    -672: (1, -233710087038209530076475413533800000, 143795796879281564339732958685144384310388000000, 100076681410892904733083303960226381255626488280000000000, -11648430060977090154400304982641226170804037030138000000000000, -38314338299128352942471133016488104735916144615960000000000000000, 7978703763080054938708661423956172316164103102603828000000000000000000, -9838879748511172986462511565394793711371892625656920000000000000000000000, -4237992552215997959225380114411105686586915423749279000000000000000000000000),
    -675: (1, 280244748103684391377172529765089280, 36741609284830353098825275576161864253440, 3283548433378494044784212121590732589681868800, -40403338809853991973278867579964893049937251532800, 365545010929303872566806343360090400895165551083520000, -518934241375857119324489861138068922472670611351011328000),
    -676: (1, -297704363274819300973648925452724352, -162434321923500244963691319577164899941782327177547776, 1250093798808181921331239024003439064057314451090248756625408, -25139996004850385022058823419251332525548857652725838427880085782528, 183121307244468811013362819441915945367491906284343782971561865394520064, -437940714559143999422451459680237045189874838812636812209273628143801860096),
    -683: (1, 453918858809750227974703697494016000, -348849132150121827613917484442174019862528000000, 268100148999161642690747540961044577891601065443328000000000, -5025162304773332210314910428254527856822229389017088000000000000, 26166115688569819428666837825663510027688881422336000000000000000000),
    -688: (1, -612711818312922195678985083375654000, 542090882349799145243237595878239747254750000, -1563641315241543882064062754494470169795000000000, 2247353146940073239738967954039378310380187500000000, 418692965492345733785114777449885492571625000000000000, 35666765383644406075046298046290446413640625000000000000),
    -691: (1, 733155214316421345930476736919437312, 6703571995070311798431761340831465046278144, 162256308439015306053871060497929160439748974608384, -9744515674227833316204230178037052905354521396539031552, 2881012171895295750002031701073564303892269058276549227184128),
    -700: (1, -1253156380350127685465362671290113845, 131092763407177117096672838357506053862815, 6145165148367786469915434874758615187908118800, 152994800337304876257175053273288365860639529326575, -857637007838292266512501851631510160613001848780896250, 1279550552930955466965967752790818024379275213338521562625),
    -707: (1, 1896908196134808026819028803674112000, -2348163642809062173079548581285822944247808000000, 2906768622940702048127349597557735037973448835989504000000000, 483991714896097062009964822901019056444300864589398016000000000000, 6903373536375246004273099602846064408758831459747233792000000000000000, 45650758520764343599531218962600327069641099781865472000000000000000000000),
    -708: (1, -2012303924332635494819557244440800000, -2854565250565963840094617979015298078098347812480000000, 3603887011528002652771717224491220641587422892784070051840000000000, 4046686423378034814414234559373865948538701215210194862739456000000000000),
    -712: (1, -2547428128763396947913203000755264000, 4065864582832242011994655020099723505337949767424000000, 267549782848128597871924625562997820500018126688256000000000, 101406901678845248734425825236242472665257177466036224000000000000, -344229835327193328453009390255310533401770044568633344000000000000000, 785817223009850352446749662671181156471363221427585024000000000000000000, -1145543789950432126531816380596120320711223446238920704000000000000000000000, 648241567076450859966234852141519010761029802805690368000000000000000000000000),
    -715: (1, 3038922093329613647424771157499904000, 60156378344564221943954774472086041657344000, 94657547256854352451418607502680693669888000000, 13189879204176058896562640516998642620432384000000),
    -720: (1, -4074358963317658037659497739760296000, 5872950365773055261283314597325177015222112000, -119800193754976471093440042600863526672278849984000000, -35157722076390404483056409042116830868695186279213696000000, -3135891451090538129338545856605366334269691931434972672000000000, -2441944265123302492258018956512015449963136520414891272192000000000, -4353073491362129429798741859705534468181235201826237399928832000000000000, 61507529066665547077295393439762642391874670601552764521141702656000000000000),
    -723: (1, 4855690107103225136120718536060928000, 8222450770908698023546828197247145547399168000000, -17437817166277457429521660531780027831812096000000000, 43799003445375960815587788104700084092928000000000000000),
    -732: (1, -8201294701505533978881129925587761625, 16539025024426427599747332149490289739251569328125, -1044468437161280752436852160777372621759135920250000000, 32266017029436711945574899617391240101374329554424316406250, -106966283826789921533027550312322000548643705272569366455078125, 205125367818239586357366782447551048958050275793200634002685546875, -18338497339239136844269076809669249520895538810549694538116455078125, 19312819940374538093959012358772622468823540804560995161533355712890625),
    -736: (1, -10341954237504564977090663227248977472, -18384487215963377937832461451320115047707708160, 283242345825578385963814784975509432839483190517919744, -11859979559323959907927043487764672796249235605608724323475456, -19806036305729627216728529468133217884407295134608720254698520576, 21287278237940740317394910024801922545381848383031525595200716329189376, 66298044925638540657730379120853125593774429600664803587820813665498562560, 60061263990047355807092716181487945219840930463261944563173609758415329951744),
    -739: (1, 12301647126979210892135760009684713472, -521202850366310037383168135322581564217360384, 8435175478606501944760514102198191107943823755444224, -39465098292737222691630856494517926607508369968554049536, 70879256868963610140332287398622548391739243260758328344576),
    -747: (1, 19506549129659843880518872730185728000, -1739910303132650092314136789278261248000000, 867239909489765164489182213498417971200000000000, 6153305059000738275431089671195439661056000000000000, -64835561517901382404643579646446405681152000000000000000, 122610264884195004276135169939960886198272000000000000000000),
    -748: (1, -20660082823607096260557693839278404000, -7843166260951182924654299188909364004000000, -93907027012642433024639652171634097345735823840000000000, -35789562604701242403041126998666027131602379470352000000000000, -4161062207951390320730581122152303002996237381468224000000000000000, 14102760806179287374525913233889892863270846335963712000000000000000000),
    -760: (1, -41045008988631123111685822548134227200, 262960509575258849119050573504013616920976671774792704000, -8762694788548498478760416933120597566268079681131589510758400000, 57390991709103678336339431944416743303984993656228540622045184000000),
    -763: (1, 48688224497542950284157258615128064000, 11764579526453656222964578511153528832000000, 3730143008151395358758986101112700928000000000, 1212202634617724845661254714392576000000000000000),
    -768: (1, -64670563924749466394147714711210760000, 259399171372225204966661002550162965440584749500000, 736154608709059015006498116049282929703692588255135000000000, 81580198367732340212612911642019252294658707587093110574218750000, 46721890317786185410700227174952944124137546155237676733203125000000000, 4900698705373764641365354757988280247136785578572898154329101562500000000, -6042818923606714182438083804301870179528875596947614517314453125000000000000, 15926143836920796849094002857387135460968690480161221686575776100158691406250000),
    -771: (1, 76644978500101583982634373055498485760, 325572209586735477136602675439314988370753017085952, 7594080830144514531813778205972493677835173653113137528832, 463885955604298483342404429131145213835946162203272517583917547520, -1429554314369800014560099942657739809600837745393128794016090721091584, 1158874532512529823117839025885691033242715995831907669464960496690003968),
    -772: (1, -81104350841312411963776730201270496000, -730409189972766569984362477406681962614314316392064000000, -1654219429424921222911088262751088404746562249930752000000000, -4039979678479578220330132982722340932044073244946432000000000000),
    -784: (1, -159418202346978959346217517779224787008, 555191826737960502328886428204960418989244065536, 39749953136422304796504032104692468442173444903095734272, 1081819995845036197038223842100241602490710281886437446644948992, -1313878453588348454235436172116960425379628117793329258035991543808, 3844427032631139909031306813810132037738046220332405961176762437166170112, 549343005374796832642333544610489884407197978370108333534030549561248841728, 807270238402274589348185900788787471062100857196239802698769503154552004673536),
    -787: (1, 188607826190137802296622247543103488000, 69003057677093510781188231291411103744000000, 16295872719960594906811990015695057321984000000000, 17969534868961880720450029518624242270208000000000000, 121799441042213268250468077932063490048000000000000000000),
    -792: (1, -249433117287892229270918840407682112000, 3939409895697019766396355027869840460446054032918272000000, -21664732727152455018727704474524695006816938100617216000000000, 23663161891476970903060191195435997005441856270786560000000000000, -24793183997044981061979131341740434855851457826254487552000000000000000, 81022052673617626141650602652866142458780992098656059392000000000000000000, 58427294420347510769774516683508948517463699082742595584000000000000000000000, 12768644754055994254973993366065137681048723001341640704000000000000000000000000),
    -795: (1, 294853904675299611949375562546552832000, 1962512368737475150054890329369747830206508302336000, 96989374802114211792220362019627433906928110027145216000000, 1580866394929445594613317271657673734190830966521462784000000),
    -808: (1, -606544748743842831563632744122859056000, 14938062448136132459695331800504856899108496990798784000000, -6485648984910606765832741139482781395227930706015758336000000000, 1803501184045414415458226074594817032543094739149616377856000000000000, 181128288867528862366782440535423928657211618498508029952000000000000000, 47935532966149606407423899542710890275091793038645919744000000000000000000),
    -811: (1, 715803850277269060143337898717986062336, 25645222687092338722305478236341654296989794304, 2476190510453623046511601604479343457848144109936574464, -1602886981400187091839127350649694061166802105702833188765696, 319996596219961348581003665482834034884511040424887266928167485440, -800651781208977500867676974252244833555687753006234188380537794592768, 3952215468738319514208754467324345971628622588902185420060055573551382528),
    -819: (1, 1111636203878351887090798016351101059072, -115499647642003452853119475957670250711430987776, 4573383074290963647652713532439650961436595502689812480, 1735600166630284662960529896251419436469964427472366093729792, -3127174271915303444994090267206245302384335327425454239471632384, 47531908122934069403840238579506488481423813924084185371336719204352, 18085702271142096270607084197564738642542304682778387430224624968248852480, 7932649557486827877721052585800733725794481007039923471061215793209845743616),
    -820: (1, -1174337676197029514663257641696326592000, -40242920602555180754171145386354425306546394747775756288000, 2622032066129308298911642413719025994246636501871201799733248000000, 5921762429084184504482281276631533175886519613599247856347643904000000, -49385838859794684578617903350009352542131555885099985549832224768000000000, 326685341487801693986861349083668135208043197693638468385037204062208000000000, -209206135951926489244947052191419600060571429945927215378285293731840000000000000, 204637330106600513741387631240141531344900447928153860219989040516038656000000000000),
    -827: (1, 1722661406174248169173628838770601984000, -20650626601662469145660884497034859290382303232000000, 247552058473310741374898566702532407246283982086317539328000000000, -12601837950859481738652073800208712904901629097618505203712000000000000, 212605001857755402367927910894529265872742648535302639976448000000000000000, -1076015162843768992957043985457154345188464247512545705852928000000000000000000, 2445553702661102418981136764326445223258766539896504908251136000000000000000000000),
    -828: (1, -1819343755551914380120575986714936366375, -155241642964074826687355141409694317641437500, -6255952940792043686802768545302127864857236328125, 303627853695026697747014082081770550922214087158203125, -1055648796239235006353912975802938543893809630310058593750, 994085932928328513269075382688739701324515086338043212890625),
    -832: (1, -2262722119966669232161707231304764936000, -15607587817412718675757939483246624787512852500000, -11601158474487928781533831464284645353443867861000000000, -2613042685916467354712948098864927956499450281041156250000000, 26741394021605886219351747174406277984150994507560625000000000000, -97211054401478483386765465438623057829086679366423757812500000000000, 108736773033579666864121372867362729243783825595849265625000000000000000, 207455704364995393622733817970863249742168401731898681640625000000000000),
    -835: (1, 2663908095665787906008140453642906828800, 204438038298621794574204160089592858008354816000, -2065662052326646805861259358837766884548201676800000, 6664997136310346124828673949691089890037414756352000000, -7042823494828064970531335733824610561942964980940800000000, 4891900660599003311385391904709529453654625325416448000000000),
    -840: (1, -3494487845306481075093315600749304691200, 206573882876758009898241769258678546966352946154161788928000, -3134769336133353615460866275393209275783941494973163498240275428147200000, 267678830160178923896641219852982233572924885080172883621331723095220158464000000, -1111712812272489788109971969097031933551408742194642794550538731744862298072678400000000, 454668527671405657965710869144455214652592634921420559367890411545189775674863255552000000000, -5112159939990146378938499680802637042771646067107417706535388782137560566356569069977600000000000, 7587169380271379738636919142674280077130439504327732605512510089785122099137867107270656000000000000),
    -843: (1, 4110870386791186329312795254569168896000, 65853429066427465015436329665082314084247928832000000, 37712121952130322350424411490310586953108092354560000000000, 13875309039130379123931424254934593471702463886131200000000000000, 73075310770259371090473394277205354753774863920398336000000000000000, 158692695909564629221707977026748300372656225517568000000000000000000000),
    -852: (1, -6680895145643489619062121564880755648000, -546074483267397728325634259644287686071603927317457152000000, 10284821622033602451670634606132066226181623275279140805494861824000000000, 46846835599092601355288226682492045721779606244807135121664326524928000000000000, 12089889771973566318301723197286312377799073330749870993054354496028672000000000000000, 10658653499206182817142966888146260430750861112801078521762505443500883968000000000000000000, -2661304063206281188420347972457047853310490375560359790756330900853620736000000000000000000000, 1612367267971475199440710611641385268057869742190282738951898520765857792000000000000000000000000),
    -856: (1, -8283439699523057056710299565708340695936, 753904043512209705196167696045982334339284730437509446135808, -44861747133100666670326391171999140977507020813422564697216507707392, 6991369178933310977728137772066916192262112745060166206505651706920934834176, 100840602675506952168901909673258837400582800529922501097017442693461370191478784, 595320092985311485518113602681984286078598796937520420636189368159335021853433397248),
    -859: (1, 9729704930387459982187979811126816866304, -1567981867819951857438274995475995306493967597568, 96605827634631091326644502274552505349352028214078210048, -22891549188863688130830736915023220430586081481798242357215232, 25687949852570186267052644386825393638247990061761236292055605444608, -62251432058869446795243738839465754101255963512935282057369368685182976, 60840761437613566888711032177150718357895558969645698306118384015873409024),
    -867: (1, 14923676060461817600380995991658397696000, 367424180219313125835753436424699754428334342144000000, -363299799803406415238234259440206899137613209272320000000000, 110435906540395590439728400091584740929517223963262976000000000000, 106110003377820534797452421571371781575278631527120896000000000000000, 54198575106762219309306750175869557905848927491457024000000000000000000),
    -868: (1, -15741186408247165829355299967450436032000, -1974950399340297216385036265608215318709613636666722560000000, 1084165259024824617523114514914286804516387861794134945792000000000, 4832336678320186564947698246363596254480056565762808111104000000000000, -3688512135428749819755387763199836244226650046656053248000000000000000000, -25842148695545547358731852874265215585849882892400677879808000000000000000000, 44378942591429771358105182513581760001477784533918208229376000000000000000000000, 11371446703972153557005184311153593718600725700309629796352000000000000000000000000),
    -880: (1, -29781283083164337628532883589758763272000, 394924267109031637155481141464524116039967284491375, -48563440109049085735322381227458895847987356104982748250000, -12425315525808682626492416080553384697818961835242196615181859375, -17699499386266304885284098943933707102943005712120323244803654562500000, 171401658686352720418782023552351340224675268711254376519116362515099609375, -482160540467556939032577498022028447151670172574242129886009889282324218750000, 437933653351422497825712813509539954823526996235369230198777456706540918212890625),
    -883: (1, 34903934341011819039224295011933392896000, -151960111125245282033875619529124478976000000, 167990285381627318187575520800123387904000000000),
    -891: (1, 53225524125202190209686089298526984077312, 4594037505619224384492487458826312531064723079168, 1038741776815098026658188487974579443177380368468924170240, -31854233116932749008032176737600378973050147231593732960681984, 1035035326134443716536282940826886761586345876366755233455717482496, 5168163648975512659218280004228058594242246960004693595942643222708224),
    -892: (1, -56100625263034189270874516313520288130250, 36682546052170023559690090806474794430137859375, -17447062783361851082567188998609741584508958751953125, -3581942103445146895987714777999691423326643300898193359375, -376317958803610515808933126877165900572458146702090515136718750, 12888074513058337599431425295320655246615604080287582397460937500, -372149812047162494048395602957711481733426254780107021331787109375),
    -900: (1, -85367117095565698138593773880519557543424, -24942266940674267225801669590950077121570482271389359110635520, 101603203192205824246255328904577634479259834604958774981992382464, -189769443940144827839527371611346257082331678097547366839587235168256, 1098430914413638930820009903023957287595511010439478427107839237793947582464, -2022524573647342918280124468576887398696291585495295912730988135111220747304960, 2666636459316679858538034264275823471283788269019071039602253291794099879255474176, -4505595488855055680380278948251098181568447060309250050058263945455435012452122624),
    -904: (1, -105232090472405843529324874950793760389632, 34136759844202695849676952671984446452103045659278902245179392, 8843635213700260530933073494189639108219892487853462140789325306003456, 875108533816120485059399024511676251536750002061840070754648001857591468621824, -3267779893984300414470855349561423767762687447234272942677311007916870284603293696, 120904883437149580765327208646326712645659926129632069283432742507181066145158590889984, 616215650990935344228967444647916612741560908947286959624098645643452461938810109552492544, 3488838936048965271195721811656374469089896850076042183740021422914461046377929895233514897408),
    -907: (1, 123072080721198402394477590506838687744000, 39181594208014819617565811575376314368000000, 149161274746524841328545894969274007552000000000),
    -912: (1, -159684335583614994121690745429033730984000, 8666486798098119106174563714674233229118522982908000000, -173180340954468826898242297684133257472551306129611058008000000000, -734701011310861097918254876906183503984119102166504300570000000000000, -3458915670414347785525465745579235341107088024272994657303064000000000000000, -19829344530444693227387820514981953905649304538413135966877892000000000000000000, 30603730518456999196763742094362383163862117974240753958520472000000000000000000000, 292248170254121235619993701489303707142172322588775105563785569000000000000000000000000),
    -915: (1, 186627311568162254652457351930438621593600, 10665182589849263321659594224288888316698204850618368000, 1911117653858213529055899613140385436093019832644473035161600000, -683634932911280143877531576013158673185381886359897993983819776000000, 1191860687224407349325828405512653573945197811392414212685022049075200000000, -10489960107953362378189920112570620718805966517738855799965556081164288000000000, 43855439221605005920636851848560021956384388384056044083990431408114892800000000000, 4778598459304636281822769179464711574701772719392590046424730998308601856000000000000),
    -928: (1, -365698321891389219219142531076614125108000, -8992980876865725569995845414882451608653638542000000, 13390564998216290984073146179239751905642859284000000000, 221147287295840631009155378215919896241234993293617000000000000),
    -931: (1, 426825670734143049390226201308485409177600, 55890403399933273258794756214733278270255068610560, 19158475518778580965654795745833295381755715032783930785792, 168561941548969525986478743144511786925541326306064233857548288, 575189149356541771195221007548176708986040419379171425940605501440, -7386309756969448257470450133409239259554086107480959871912419262464),
    -939: (1, 643769580989338183909418822153022152835072, 55586849969378700008713392929540253523509353365748318208, -20687636271171058530758216980402785183556485984763720433299095552, 2940858355414790924106273619734960462655934355629313592494752959089868800, -5504223925677243705210791927479997260528390484447679461056971906317021085696, 10889963956570922788708680325979283701383508794622225517705492599842926451752960, -7059079382504173607597607915672743790646423785743729469904815061401427183669346304, 2024902434669436324739145341733692121629358550134383994031382133501370645111659036672),
    -940: (1, -677621063891416076248230276783145353540000, 157465813216968792011512406135114199587296070496000, -557802358790342917462106846351452762488715684290139386624000000, 129621471765539841075613092102924094889300530308678275627965504512000000, 150374151707312696807411533594380715749234259093054453174234214400000000000, 179388984738118075927335478384580041754700365040094034407582402510848000000000),
    -947: (1, 969285419584981893143448179709100896256000, -95925831671373391613819628116008945992178543362048000000, 9493349427387940653432106335736508248255562379877296382148608000000000, 138392022610291656780042207674445576504764510661377409324941312000000000000, 20199776314224058950365890537565315358777099022469188831674368000000000000000000),
    -952: (1, -1250680692430675587428926155257574505536000, 1398684197243031487731716900176949010950344385170323392256000000, -1460506257540279616113180180469936930740753040759099691200512000000000, 15992247010538127637727164332469124388512242356012692730568704000000000000, -122373980350411313421741467080588001304951213611614615927259136000000000000000, 363969630606174800770050152072850567154113014133031225808388096000000000000000000, -592557041714469241897016906704735355784894422824869937715085312000000000000000000000, 493920695006430907709173729054732122181918904423699735755358208000000000000000000000000),
    -955: (1, 1456880094856940116294718071366713311232000, 396469707692607651662987973604670339150203846656000, 520207875218635547684744626511303352924946915393536000000, 438953058221654415262613188100773336407392447044238966784000000),
    -960: (1, -1877825235500241645559415778799662274516800, 231603028815859449990230191757377253206753790524668348000, 8510061434050416980144286390949909981067452922415342940850251200000, -2443532747525396974127268466209799333721900436992701209087069802416150140625, -2181186855129642826113909435666872312018703669072139897795214050066107037500000, 11343056878593318585549788502195152637913990578504007725465584553919672357781250000, 11671486871422839327369948216751300053154599586498205189044712936237217037500000000, -19192288008617553802976506336613107097580959050398227942173633645508625484081787109375),
    -963: (1, 2186030586436385809493739168780136288256000, 112488709831669838242898071905169624268800000000, 253765758001451434795075083364515023159296000000000, 3886621812484169095239511756859674325942272000000000000, -11551747659112351822438130857235662422147072000000000000000, 22576353114860596323808371902774966361260032000000000000000000),
    -979: (1, 4897095498150258061393918811814252543639552, -2745802068956130180697143221825446875143596438192128, 589520179717321952159610085436888408453713173860944032301056, -1322703982629372572876164117246022193808478202872056584884346421248, 916257787625809004918836254250770296891108887112981767512846720779157504, 2204787059539590582951297575074592196712742441023010756587849923537773002752, -22643568178464477657797831635107226279672744582352200786450999877362565662113792, 41456720643855288369027026098241251192498301669071928226258093264056046894119387136),
    -987: (1, 7311497286020753098637376411748003504128000, 1419085079338686192332016369584506969346142319411200000000, 1871196748851681685262168201856508499939941431304519680000000000, -17525372243225465818923603787827275077385860486489178112000000000000, 175519677296813899294782422675994144944294962020854267904000000000000000, -738865832866383397613300288928804236455666502102906044416000000000000000000, 1015734896368101959906550405520147975434348570978929344512000000000000000000000, -86561080972804089195032732237332898908212644882153472000000000000000000000000000),
    -988: (1, -7686260772919956192092959105066444924388250, 2532835862794270727054106141876129096796815609375, -415425015530688765021462979459998135459997197656250000, 1439425711515104898407394446456770226677541331765380859375, -851246405305114045923979169049333147116118615064727783203125, 156923629064905439774176378010411051410367908309970855712890625),
    -995: (1, 10898583330497937885196343531654435700736000, -2416346836659256769074846469235340589704096371911426048000, 535734097384699985051067999540981151603192088077511541759653445632000000, 217029363832203538036010478387856843711248927324436786385626509019021574144000000, 19268761151540238893754846215526934598980038158578487990690668574208551813120000000000, 731848779330132181036381207237516688608618691617197820085107648110602079717818368000000000, -1878797468359099326102323843656108409930138188000048292024138306492722136519540736000000000000, 1281350115758093409346818447390495398325805514140454923517632350610260980827376582656000000000000),
}
